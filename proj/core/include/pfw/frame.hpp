#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfw/bits.hpp"
#include "pfw/poset.hpp"

namespace pfw {

using Element = std::uint32_t;

// A finite distributive lattice, held as the lattice of down-sets of its
// poset of join-irreducibles. Element i is a down-set encoded as a mask over
// the join-irreducible points; elements are sorted by (cardinality, mask), so
// 0 is the bottom and size()-1 the top. Every finite distributive lattice is
// a frame, so no separate infinitary join is needed.
class FiniteFrame {
 public:
  // Throws CapExceeded when the poset or the element count exceeds caps().
  explicit FiniteFrame(Poset jir, std::vector<std::string> element_names = {});

  std::size_t size() const { return masks_.size(); }
  Element bottom() const { return 0; }
  Element top() const { return static_cast<Element>(size() - 1); }
  bool trivial() const { return size() == 1; }

  Mask mask(Element e) const { return masks_[e]; }
  std::optional<Element> element_of(Mask m) const;
  // Throws PreconditionError when m is not a down-set of jir().
  Element at(Mask m) const;

  Element meet(Element a, Element b) const;
  Element join(Element a, Element b) const;
  bool leq(Element a, Element b) const { return (masks_[a] & ~masks_[b]) == 0; }
  template <class Range>
  Element join_of(Range const& r) const {
    Mask m = 0;
    for (Element e : r) m |= masks_[e];
    return at(m);
  }
  template <class Range>
  Element meet_of(Range const& r) const {
    Mask m = jir_.all();
    for (Element e : r) m &= masks_[e];
    return at(m);
  }

  // Largest x with x ∧ a = 0.
  Element pseudocomplement(Element a) const;
  // a* when a ∨ a* = 1.
  std::optional<Element> complement(Element a) const;

  Poset const& jir() const { return jir_; }
  // The element ↓p for a join-irreducible point p.
  Element ji(std::size_t point) const { return ji_[point]; }
  std::vector<Element> join_irreducibles() const { return ji_; }
  // Elements covered by e (exactly one for a join-irreducible).
  std::vector<Element> lower_covers(Element e) const;
  std::vector<std::pair<Element, Element>> covers() const;

  std::string const& name(Element e) const { return names_[e]; }
  std::vector<std::string> const& names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;
  // Like find, but throws InvalidInput naming the missing element.
  Element parse(std::string_view name) const;

 private:
  Poset jir_;
  std::vector<Mask> masks_;
  std::unordered_map<Mask, Element> index_;
  std::vector<Element> ji_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> by_name_;
  std::vector<Element> meet_table_;
  std::vector<Element> join_table_;
};

using FramePtr = std::shared_ptr<FiniteFrame const>;

// Down-set lattice of p.
FramePtr frame_from_poset(Poset const& p, std::vector<std::string> element_names = {});

// Down-sets of p enumerated in sorted order; throws CapExceeded past `cap`.
std::vector<Mask> enumerate_down_sets(Poset const& p, std::size_t cap);

struct TableFrame {
  FramePtr frame;
  // renaming[i] is the frame element of table row i.
  std::vector<Element> renaming;
};

// Meet/join tables over elements 0..n-1. Validates the lattice axioms and
// distributivity exhaustively; the error message of a distributivity failure
// names a violating triple.
TableFrame frame_from_table(std::vector<std::string> const& elements,
                            std::vector<std::vector<std::size_t>> const& meet,
                            std::vector<std::vector<std::size_t>> const& join);

struct FamilyFrame {
  FramePtr frame;
  // member[i] is the frame element of family[i].
  std::vector<Element> member;
};

// A family of subsets closed under binary union and intersection (with a
// least and a greatest member) ordered by inclusion. Duplicates are allowed.
FamilyFrame frame_from_set_family(std::vector<Bits> const& family, std::vector<std::string> names = {});
FamilyFrame frame_from_mask_family(std::vector<Mask> const& family, std::size_t universe,
                                   std::vector<std::string> names = {});

// Well-known small frames.
FramePtr two_frame();      // 0 < 1
FramePtr chain_frame(std::size_t n);  // n-element chain, middle elements m1.. or "m" when n == 3
FramePtr diamond_frame();  // 2x2 with atoms a, b
FramePtr trivial_frame();  // one element
FramePtr boolean_frame(std::size_t atoms);

}  // namespace pfw
