#include "pfw/sublattice.hpp"

#include <algorithm>

#include "pfw/error.hpp"

namespace pfw {

bool is_sublattice(FiniteFrame const& l, std::vector<Element> const& members) {
  std::vector<bool> in(l.size(), false);
  for (Element e : members) {
    if (e >= l.size()) return false;
    in[e] = true;
  }
  if (!in[l.bottom()] || !in[l.top()]) return false;
  for (Element a : members)
    for (Element b : members)
      if (!in[l.meet(a, b)] || !in[l.join(a, b)]) return false;
  return true;
}

Sublattice::Sublattice(FramePtr parent, std::vector<Element> members) : parent_(std::move(parent)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_sublattice(*parent_, members)) throw InvalidInput("not a bounded sublattice");
  members_ = std::move(members);
  flags_.assign(parent_->size(), false);
  for (Element e : members_) flags_[e] = true;
}

Sublattice Sublattice::full(FramePtr parent) {
  std::vector<Element> all(parent->size());
  for (Element e = 0; e < all.size(); ++e) all[e] = e;
  return Sublattice(std::move(parent), std::move(all));
}

namespace {

std::vector<Element> to_list(std::vector<bool> const& in) {
  std::vector<Element> out;
  for (Element e = 0; e < in.size(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

}  // namespace

Sublattice sublattice_generated(FramePtr const& l, std::vector<Element> const& r) {
  std::vector<bool> in(l->size(), false);
  in[l->bottom()] = in[l->top()] = true;
  for (Element e : r) in.at(e) = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Element> cur = to_list(in);
    for (Element a : cur)
      for (Element b : cur) {
        for (Element c : {l->meet(a, b), l->join(a, b)})
          if (!in[c]) {
            in[c] = true;
            changed = true;
          }
      }
  }
  return Sublattice(l, to_list(in));
}

Sublattice subframe_generated(FramePtr const& l, std::vector<Element> const& r) {
  std::vector<bool> in(l->size(), false);
  in[l->bottom()] = in[l->top()] = true;
  for (Element e : r) in.at(e) = true;
  // Finite meets first.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Element> cur = to_list(in);
    for (Element a : cur)
      for (Element b : cur)
        if (!in[l->meet(a, b)]) {
          in[l->meet(a, b)] = true;
          changed = true;
        }
  }
  // Then joins of arbitrary subfamilies, grown one member at a time; the
  // meet-closed generators stay meet-closed under these joins by
  // distributivity.
  std::vector<Element> gens = to_list(in);
  std::vector<bool> joins(l->size(), false);
  joins[l->bottom()] = true;
  std::vector<Element> frontier{l->bottom()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element g : gens) {
        Element y = l->join(x, g);
        if (!joins[y]) {
          joins[y] = true;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  for (Element e = 0; e < l->size(); ++e)
    if (in[e]) joins[e] = true;
  return Sublattice(l, to_list(joins));
}

Sublattice complemented_elements(FramePtr const& l) {
  std::vector<Element> out;
  for (Element e = 0; e < l->size(); ++e)
    if (l->complement(e)) out.push_back(e);
  return Sublattice(l, out);
}

std::vector<Element> complemented_within(Sublattice const& s) {
  auto const& l = *s.parent();
  std::vector<Element> out;
  for (Element a : s.members()) {
    for (Element b : s.members()) {
      if (l.meet(a, b) == l.bottom() && l.join(a, b) == l.top()) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

bool is_boolean(Sublattice const& s) { return complemented_within(s).size() == s.size(); }

bool is_join_dense(Sublattice const& s) {
  auto const& l = *s.parent();
  for (Element a = 0; a < l.size(); ++a) {
    Mask m = 0;
    for (Element x : s.members())
      if (l.leq(x, a)) m |= l.mask(x);
    if (m != l.mask(a)) return false;
  }
  return true;
}

Materialized materialize(Sublattice const& s) {
  auto const& l = *s.parent();
  std::vector<Mask> family;
  std::vector<std::string> names;
  for (Element e : s.members()) {
    family.push_back(l.mask(e));
    names.push_back(l.name(e));
  }
  FamilyFrame ff = frame_from_mask_family(family, l.jir().size(), names);
  Materialized out;
  out.frame = ff.frame;
  out.embed.assign(ff.frame->size(), 0);
  out.restrict.assign(l.size(), std::nullopt);
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    out.embed[ff.member[i]] = s.members()[i];
    out.restrict[s.members()[i]] = ff.member[i];
  }
  return out;
}

}  // namespace pfw
