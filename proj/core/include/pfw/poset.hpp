#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfw/bits.hpp"

namespace pfw {

// A finite partial order on points 0..size-1, at most 64 points.
class Poset {
 public:
  Poset() = default;

  // `le` lists pairs (i, j) meaning i <= j. Reflexive pairs are implied.
  // The transitive closure is NOT taken: the relation must already be
  // transitive, otherwise InvalidInput is thrown with a witness triple.
  Poset(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& le,
        std::vector<std::string> names = {});

  static Poset chain(std::size_t n, std::vector<std::string> names = {});
  static Poset antichain(std::size_t n, std::vector<std::string> names = {});
  // Transitive closure of the given cover/order pairs; throws on cycles.
  static Poset from_covers(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& covers,
                           std::vector<std::string> names = {});

  std::size_t size() const { return down_.size(); }
  bool le(std::size_t i, std::size_t j) const { return (down_[j] >> i) & 1U; }
  Mask down(std::size_t i) const { return down_[i]; }
  Mask up(std::size_t i) const { return up_[i]; }
  Mask all() const { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }
  bool is_down_set(Mask m) const;
  std::string const& name(std::size_t i) const { return names_[i]; }
  std::vector<std::string> const& names() const { return names_; }

  // Points listed so that every point comes after all points below it.
  std::vector<std::size_t> linear_extension() const;
  // Strict order pairs (i < j).
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  std::vector<Mask> down_;
  std::vector<Mask> up_;
  std::vector<std::string> names_;
};

// perm[i] is the point of `b` matched with point i of `a`.
std::optional<std::vector<std::size_t>> find_poset_isomorphism(Poset const& a, Poset const& b);

}  // namespace pfw
