#pragma once

#include <optional>
#include <vector>

#include "pfw/frame.hpp"

namespace pfw {

struct FrameHom;

// A bounded sublattice of a frame, as a sorted list of member elements.
class Sublattice {
 public:
  Sublattice() = default;
  // Validates membership of 0 and 1 and closure under binary meet and join.
  Sublattice(FramePtr parent, std::vector<Element> members);
  static Sublattice full(FramePtr parent);

  FramePtr const& parent() const { return parent_; }
  std::vector<Element> const& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element e) const { return flags_[e]; }
  bool is_full() const { return members_.size() == parent_->size(); }
  bool operator==(Sublattice const& o) const { return parent_ == o.parent_ && members_ == o.members_; }

 private:
  FramePtr parent_;
  std::vector<Element> members_;
  std::vector<bool> flags_;
};

bool is_sublattice(FiniteFrame const& l, std::vector<Element> const& members);

// Least sublattice containing r ∪ {0, 1}: pairwise ∧/∨ closure to fixpoint.
Sublattice sublattice_generated(FramePtr const& l, std::vector<Element> const& r);
// Least subset containing r ∪ {0, 1} closed under ∧ and all joins: meet
// closure followed by closure under joins of arbitrary subfamilies.
Sublattice subframe_generated(FramePtr const& l, std::vector<Element> const& r);

// B(L): the complemented elements.
Sublattice complemented_elements(FramePtr const& l);
// Members of s whose complement in l exists and also lies in s.
std::vector<Element> complemented_within(Sublattice const& s);
bool is_boolean(Sublattice const& s);

// Every element of l is a join of members of s.
bool is_join_dense(Sublattice const& s);

// The sublattice as a frame of its own, plus the inclusion.
struct Materialized {
  FramePtr frame;
  // Inclusion frame -> parent.
  std::vector<Element> embed;
  // Parent element -> frame element, only meaningful on members.
  std::vector<std::optional<Element>> restrict;
};
Materialized materialize(Sublattice const& s);

}  // namespace pfw
