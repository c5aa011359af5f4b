#include "pfw/predicates.hpp"

#include <deque>
#include <unordered_set>

namespace pfw {

namespace {

// Closure of `seed` under binary joins (or meets) within `members`, then
// down-closure (or up-closure) within `members`, repeated to fixpoint.
Bits close_ideal(FiniteFrame const& l, std::vector<Element> const& members, Bits cur, bool up) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Element> in;
    cur.for_each([&](std::size_t e) { in.push_back(static_cast<Element>(e)); });
    for (Element a : in)
      for (Element b : in) {
        Element c = up ? l.meet(a, b) : l.join(a, b);
        if (!cur.test(c)) {
          cur.set(c);
          changed = true;
        }
      }
    std::vector<Element> now;
    cur.for_each([&](std::size_t e) { now.push_back(static_cast<Element>(e)); });
    for (Element x : members) {
      if (cur.test(x)) continue;
      for (Element a : now)
        if (up ? l.leq(a, x) : l.leq(x, a)) {
          cur.set(x);
          changed = true;
          break;
        }
    }
  }
  return cur;
}

std::vector<Bits> enumerate_closed(FiniteFrame const& l, std::vector<Element> const& members, Element start, bool up) {
  Bits seed(l.size());
  seed.set(start);
  seed = close_ideal(l, members, seed, up);
  std::unordered_set<Bits, BitsHash> seen{seed};
  std::vector<Bits> out{seed};
  std::deque<Bits> queue{seed};
  while (!queue.empty()) {
    Bits cur = queue.front();
    queue.pop_front();
    for (Element x : members) {
      if (cur.test(x)) continue;
      Bits nxt = cur;
      nxt.set(x);
      nxt = close_ideal(l, members, nxt, up);
      if (seen.insert(nxt).second) {
        out.push_back(nxt);
        queue.push_back(nxt);
      }
    }
  }
  return out;
}

std::vector<Element> all_elements(FiniteFrame const& l) {
  std::vector<Element> v(l.size());
  for (Element e = 0; e < l.size(); ++e) v[e] = e;
  return v;
}

Element join_of_bits(FiniteFrame const& l, Bits const& b) {
  Mask m = 0;
  b.for_each([&](std::size_t e) { m |= l.mask(static_cast<Element>(e)); });
  return l.at(m);
}

}  // namespace

std::vector<Bits> enumerate_ideals(Sublattice const& s) {
  return enumerate_closed(*s.parent(), s.members(), s.parent()->bottom(), false);
}

std::vector<Bits> enumerate_ideals(FramePtr const& l) {
  return enumerate_closed(*l, all_elements(*l), l->bottom(), false);
}

std::vector<Bits> enumerate_filters(FramePtr const& l) {
  return enumerate_closed(*l, all_elements(*l), l->top(), true);
}

bool is_compact_element(FiniteFrame const& l, Element a, std::vector<Bits> const& ideals) {
  for (auto const& ideal : ideals)
    if (l.leq(a, join_of_bits(l, ideal)) && !ideal.test(a)) return false;
  return true;
}

bool is_s_compact_element(FiniteFrame const& l, Element a, std::vector<Bits> const& s_ideals) {
  for (auto const& ideal : s_ideals) {
    if (!l.leq(a, join_of_bits(l, ideal))) continue;
    bool found = false;
    ideal.for_each([&](std::size_t e) {
      if (l.leq(a, static_cast<Element>(e))) found = true;
    });
    if (!found) return false;
  }
  return true;
}

FramePredicates frame_predicates(FramePtr const& lp, Sublattice const* s) {
  auto const& l = *lp;
  FramePredicates r;
  auto ideals = enumerate_ideals(lp);
  for (Element a = 0; a < l.size(); ++a)
    if (is_compact_element(l, a, ideals)) r.compact_elements.push_back(a);
  r.is_compact = is_compact_element(l, l.top(), ideals);
  // Coherent: K(L) is a join-dense sublattice.
  if (is_sublattice(l, r.compact_elements)) {
    r.is_coherent = is_join_dense(Sublattice(lp, r.compact_elements));
  }
  r.is_zero_dimensional = is_join_dense(complemented_elements(lp));
  if (s != nullptr) {
    r.is_join_dense = is_join_dense(*s);
    auto s_ideals = enumerate_ideals(*s);
    for (Element a = 0; a < l.size(); ++a)
      if (is_s_compact_element(l, a, s_ideals)) r.s_compact_elements.push_back(a);
  }
  return r;
}

}  // namespace pfw
