#pragma once

// Brute-force reference implementations used as test oracles. They read only
// the order relation of a frame and search exhaustively, so they share no
// code paths with the library constructions they check.

#include <cstddef>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "pfw/pfw.hpp"

namespace oracle {

using pfw::Element;
using pfw::FiniteFrame;
using pfw::FramePtr;

inline Element glb(FiniteFrame const& l, Element a, Element b) {
  Element best = l.bottom();
  for (Element x = 0; x < l.size(); ++x)
    if (l.leq(x, a) && l.leq(x, b) && l.leq(best, x)) best = x;
  return best;
}

inline Element lub(FiniteFrame const& l, Element a, Element b) {
  Element best = l.top();
  for (Element x = 0; x < l.size(); ++x)
    if (l.leq(a, x) && l.leq(b, x) && l.leq(x, best)) best = x;
  return best;
}

inline std::vector<Element> complemented(FiniteFrame const& l) {
  std::vector<Element> out;
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b)
      if (glb(l, a, b) == l.bottom() && lub(l, a, b) == l.top()) {
        out.push_back(a);
        break;
      }
  return out;
}

// Calls f with each set partition of {0..n-1} as a block label vector.
inline void for_each_partition(std::size_t n, std::function<void(std::vector<Element> const&)> const& f) {
  std::vector<Element> a(n, 0);
  std::function<void(std::size_t, Element)> rec = [&](std::size_t i, Element used) {
    if (i == n) {
      f(a);
      return;
    }
    for (Element b = 0; b <= used && b < n; ++b) {
      a[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  if (n == 0) {
    f(a);
    return;
  }
  a[0] = 0;
  rec(1, 1);
}

// Every congruence as a label vector, found over all set partitions.
inline std::vector<std::vector<Element>> congruences(FiniteFrame const& l) {
  std::vector<std::vector<Element>> out;
  std::size_t n = l.size();
  for_each_partition(n, [&](std::vector<Element> const& lab) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (lab[x] != lab[y]) continue;
        for (Element c = 0; c < n; ++c)
          if (lab[glb(l, x, c)] != lab[glb(l, y, c)] || lab[lub(l, x, c)] != lab[lub(l, y, c)]) return;
      }
    out.push_back(lab);
  });
  return out;
}

inline bool same_partition(std::vector<Element> const& a, std::vector<Element> const& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

// Every map dom -> cod preserving 0, 1, binary meets and joins.
inline std::vector<std::vector<Element>> homs(FiniteFrame const& d, FiniteFrame const& c) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> m(d.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d.size()) {
      if (m[d.bottom()] != c.bottom() || m[d.top()] != c.top()) return;
      for (Element x = 0; x < d.size(); ++x)
        for (Element y = 0; y < d.size(); ++y)
          if (m[glb(d, x, y)] != glb(c, m[x], m[y]) || m[lub(d, x, y)] != lub(c, m[x], m[y])) return;
      out.push_back(m);
      return;
    }
    for (Element v = 0; v < c.size(); ++v) {
      m[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// C-ideals of L × M: down-sets containing the axes, closed under joins in
// each coordinate. Exhaustive over subsets, so only for |L|·|M| <= 16.
inline std::vector<std::vector<bool>> cideals(FiniteFrame const& l, FiniteFrame const& m) {
  std::size_t n = l.size() * m.size();
  std::vector<std::vector<bool>> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    auto in = [&](Element x, Element y) { return (bits >> (x * m.size() + y)) & 1U; };
    bool ok = true;
    for (Element x = 0; x < l.size() && ok; ++x)
      for (Element y = 0; y < m.size() && ok; ++y) {
        if ((x == l.bottom() || y == m.bottom()) && !in(x, y)) ok = false;
        if (!in(x, y)) continue;
        for (Element x2 = 0; x2 < l.size() && ok; ++x2)
          for (Element y2 = 0; y2 < m.size() && ok; ++y2)
            if (l.leq(x2, x) && m.leq(y2, y) && !in(x2, y2)) ok = false;
        for (Element x2 = 0; x2 < l.size() && ok; ++x2)
          if (in(x2, y) && !in(lub(l, x, x2), y)) ok = false;
        for (Element y2 = 0; y2 < m.size() && ok; ++y2)
          if (in(x, y2) && !in(x, lub(m, y, y2))) ok = false;
      }
    if (!ok) continue;
    std::vector<bool> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (bits >> i) & 1U;
    out.push_back(v);
  }
  return out;
}

// Prime filters: proper up-sets closed under meets whose complement is
// closed under joins.
inline std::size_t prime_filter_count(FiniteFrame const& l) {
  std::size_t count = 0;
  std::size_t n = l.size();
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    auto in = [&](Element x) { return (bits >> x) & 1U; };
    if (in(l.bottom()) || !in(l.top())) continue;
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y) {
        if (in(x) && l.leq(x, y) && !in(y)) ok = false;
        if (in(x) && in(y) && !in(glb(l, x, y))) ok = false;
        if (!in(x) && !in(y) && in(lub(l, x, y))) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

inline std::set<std::pair<Element, Element>> pair_set(pfw::CIdeal const& e) {
  auto p = e.pairs();
  return {p.begin(), p.end()};
}

}  // namespace oracle
