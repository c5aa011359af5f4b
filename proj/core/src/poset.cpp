#include "pfw/poset.hpp"

#include <algorithm>

#include "pfw/error.hpp"

namespace pfw {

namespace {

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  }
  if (names.size() != n) throw InvalidInput("poset: expected " + std::to_string(n) + " names");
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("poset: duplicate point name '" + *std::adjacent_find(sorted.begin(), sorted.end()) + "'");
  return names;
}

}  // namespace

Poset::Poset(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& pairs,
             std::vector<std::string> names) {
  if (n > 64) throw CapExceeded("poset points", 64, n);
  names_ = default_names(n, std::move(names));
  down_.assign(n, 0);
  up_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) down_[i] |= Mask{1} << i;
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw InvalidInput("poset: pair index out of range");
    down_[j] |= Mask{1} << i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le(i, j) && le(j, i))
        throw InvalidInput("poset: not antisymmetric at (" + names_[i] + ", " + names_[j] + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (le(i, j))
        for (std::size_t k = 0; k < n; ++k)
          if (le(j, k) && !le(i, k))
            throw InvalidInput("poset: not transitive: " + names_[i] + " <= " + names_[j] + " <= " + names_[k] +
                               " but not " + names_[i] + " <= " + names_[k]);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (le(i, j)) up_[i] |= Mask{1} << j;
}

Poset Poset::chain(std::size_t n, std::vector<std::string> names) {
  std::vector<std::pair<std::size_t, std::size_t>> le;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) le.emplace_back(i, j);
  return Poset(n, le, std::move(names));
}

Poset Poset::antichain(std::size_t n, std::vector<std::string> names) { return Poset(n, {}, std::move(names)); }

Poset Poset::from_covers(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& covers,
                         std::vector<std::string> names) {
  if (n > 64) throw CapExceeded("poset points", 64, n);
  std::vector<Mask> down(n);
  for (std::size_t i = 0; i < n; ++i) down[i] = Mask{1} << i;
  for (auto [i, j] : covers) {
    if (i >= n || j >= n) throw InvalidInput("poset: pair index out of range");
    down[j] |= Mask{1} << i;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < n; ++j) {
      Mask d = down[j];
      for (std::size_t i = 0; i < n; ++i)
        if ((d >> i) & 1U) d |= down[i];
      if (d != down[j]) {
        down[j] = d;
        changed = true;
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> le;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (i != j && ((down[j] >> i) & 1U)) le.emplace_back(i, j);
  return Poset(n, le, std::move(names));
}

bool Poset::is_down_set(Mask m) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (((m >> i) & 1U) && (down_[i] & ~m) != 0) return false;
  return true;
}

std::vector<std::size_t> Poset::linear_extension() const {
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return popcount(down_[a]) < popcount(down_[b]); });
  return order;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < size(); ++j)
    for (std::size_t i = 0; i < size(); ++i)
      if (i != j && le(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [i, j] : strict_pairs()) {
    Mask between = up_[i] & down_[j] & ~(Mask{1} << i) & ~(Mask{1} << j);
    if (between == 0) out.emplace_back(i, j);
  }
  return out;
}

std::optional<std::vector<std::size_t>> find_poset_isomorphism(Poset const& a, Poset const& b) {
  std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  auto sig = [](Poset const& p, std::size_t i) {
    return std::pair{popcount(p.down(i)), popcount(p.up(i))};
  };
  {
    std::vector<std::pair<int, int>> sa, sb;
    for (std::size_t i = 0; i < n; ++i) {
      sa.push_back(sig(a, i));
      sb.push_back(sig(b, i));
    }
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::size_t> order = a.linear_extension();
  std::vector<std::size_t> perm(n, n);
  Mask used = 0;
  // Depth-first assignment in linear-extension order of `a`.
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    std::size_t i = order[k];
    for (std::size_t j = 0; j < n; ++j) {
      if ((used >> j) & 1U) continue;
      if (sig(a, i) != sig(b, j)) continue;
      bool ok = true;
      for (std::size_t kk = 0; kk < k && ok; ++kk) {
        std::size_t i2 = order[kk];
        std::size_t j2 = perm[i2];
        if (a.le(i2, i) != b.le(j2, j) || a.le(i, i2) != b.le(j, j2)) ok = false;
      }
      if (!ok) continue;
      perm[i] = j;
      used |= Mask{1} << j;
      if (self(self, k + 1)) return true;
      used &= ~(Mask{1} << j);
      perm[i] = n;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return perm;
}

}  // namespace pfw
