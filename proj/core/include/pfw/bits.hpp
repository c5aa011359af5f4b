#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pfw {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

// Fixed-length bitset sized at runtime.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { w_[i >> 6] |= Mask{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(Mask{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Mask w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (Mask w : w_)
      if (w != 0) return false;
    return true;
  }
  bool subset_of(Bits const& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if ((w_[i] & ~o.w_[i]) != 0) return false;
    return true;
  }
  Bits& operator|=(Bits const& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(Bits const& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend Bits operator|(Bits a, Bits const& b) { return a |= b; }
  friend Bits operator&(Bits a, Bits const& b) { return a &= b; }
  bool operator==(Bits const& o) const = default;
  bool operator<(Bits const& o) const { return w_ < o.w_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      Mask w = w_[i];
      while (w != 0) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Mask> const& words() const { return w_; }
  std::size_t hash() const {
    std::size_t h = n_;
    for (Mask w : w_) h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h >> 7));
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Mask> w_;
};

struct BitsHash {
  std::size_t operator()(Bits const& b) const { return b.hash(); }
};

}  // namespace pfw
