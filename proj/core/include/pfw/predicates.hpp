#pragma once

#include <optional>
#include <vector>

#include "pfw/frame.hpp"
#include "pfw/sublattice.hpp"

namespace pfw {

// Ideals (nonempty down-sets closed under binary joins) of the bounded
// lattice formed by `s`, found by breadth-first closure from {0} without
// assuming principality. Each ideal is returned as a bitset over parent
// elements.
std::vector<Bits> enumerate_ideals(Sublattice const& s);
std::vector<Bits> enumerate_ideals(FramePtr const& l);
// Filters (nonempty up-sets closed under binary meets), same approach.
std::vector<Bits> enumerate_filters(FramePtr const& l);

// a is compact iff every ideal I with a <= ⋁I contains a. This is the
// directed-cover form of "every cover has a finite subcover".
bool is_compact_element(FiniteFrame const& l, Element a, std::vector<Bits> const& ideals);
// a is S-compact iff every ideal I of s with a <= ⋁I has a member above a.
bool is_s_compact_element(FiniteFrame const& l, Element a, std::vector<Bits> const& s_ideals);

struct FramePredicates {
  bool is_compact = false;
  std::vector<Element> compact_elements;
  bool is_coherent = false;
  bool is_zero_dimensional = false;
  std::optional<bool> is_join_dense;
  std::vector<Element> s_compact_elements;
};

FramePredicates frame_predicates(FramePtr const& l, Sublattice const* s = nullptr);

}  // namespace pfw
