#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfw/frame.hpp"
#include "pfw/hom.hpp"
#include "pfw/sublattice.hpp"

namespace pfw {

// An equivalence relation on the elements of a frame, stored as a partition:
// label(e) is the least element of the block of e.
class Congruence {
 public:
  Congruence() = default;
  // Any labelling whose equal values mark one block; it is normalized.
  Congruence(FramePtr l, std::vector<Element> const& labels);
  static Congruence identity(FramePtr l);
  static Congruence all(FramePtr l);
  static Congruence from_blocks(FramePtr l, std::vector<std::vector<Element>> const& blocks);

  FramePtr const& frame() const { return frame_; }
  std::vector<Element> const& labels() const { return labels_; }
  bool related(Element a, Element b) const { return labels_[a] == labels_[b]; }
  std::vector<std::vector<Element>> blocks() const;
  std::size_t block_count() const;
  // θ ⊆ φ as relations.
  bool leq(Congruence const& o) const;
  bool is_identity() const;
  bool is_all() const;
  std::vector<std::pair<Element, Element>> pairs() const;

  bool operator==(Congruence const& o) const { return labels_ == o.labels_; }

 private:
  FramePtr frame_;
  std::vector<Element> labels_;
};

// Compatible with binary meets and joins (finite joins suffice here).
bool is_congruence(Congruence const& c);

// Least congruence containing the pairs: union-find seeding, then
// ∧/∨-compatibility saturation to fixpoint.
Congruence congruence_generated(FramePtr const& l, std::vector<std::pair<Element, Element>> const& pairs);
Congruence congruence_meet(Congruence const& a, Congruence const& b);
Congruence congruence_join(Congruence const& a, Congruence const& b);

// ∇_a: x ≡ y iff x ∨ a = y ∨ a.  Δ_a: x ≡ y iff x ∧ a = y ∧ a.
Congruence nabla(FramePtr const& l, Element a);
Congruence delta(FramePtr const& l, Element a);
std::pair<Congruence, Congruence> nabla_delta(FramePtr const& l, Element a);

// Join-irreducible points p whose element ↓p is collapsed onto its unique
// lower cover. This set determines the congruence.
Mask collapsed_points(Congruence const& c);
// x ≡ y iff x and y agree outside q.
Congruence congruence_from_points(FramePtr const& l, Mask q);

struct Quotient {
  FramePtr frame;
  // Surjection onto the block lattice.
  FrameHom hom;
};
Quotient quotient(Congruence const& c);
Congruence kernel(FrameHom const& h);

// ∇_a ∧ Δ_s.
struct GeneratorMeet {
  Element a;
  Element s;
  bool operator==(GeneratorMeet const&) const = default;
};

// A family of congruences of `base` packaged as a frame. Element e of
// `structure` stands for the congruence whose collapsed points are q[e].
struct CongruenceFrame {
  FramePtr base;
  Sublattice s;
  FramePtr structure;
  std::vector<Mask> q;
  // θ = ⋁ (∇_a ∧ Δ_s) over decomposition[θ].
  std::vector<std::vector<GeneratorMeet>> decomposition;
  std::unordered_map<Mask, Element> by_q;

  std::size_t size() const { return q.size(); }
  Congruence congruence(Element e) const { return congruence_from_points(base, q[e]); }
  std::optional<Element> find(Congruence const& c) const;
  std::optional<Element> find_points(Mask m) const;
  Element nabla(Element a) const;
  // Present for every a when the frame is the full congruence frame, and
  // for members of s in a relative one.
  std::optional<Element> delta(Element a) const;
  // The embedding ∇: base -> structure.
  FrameHom nabla_hom() const;
};

// 𝒞L, via the join-irreducible encoding. When the base has at most
// `verify_up_to` join-irreducibles the result is compared against
// congruence_frame_by_closure and a mismatch throws Error.
CongruenceFrame congruence_frame(FramePtr const& l, std::size_t verify_up_to = 5);

// The congruences obtained by closing {∇_a ∧ Δ_b} under intersection and
// generated joins, computed on partitions.
std::vector<Congruence> congruence_frame_by_closure(FramePtr const& l);

// 𝒞_S L: the subframe of 𝒞L generated by {∇_a : a ∈ L} ∪ {Δ_s : s ∈ S}.
CongruenceFrame relative_congruence_frame(Sublattice const& s);
// The same subframe generated by {∇_s, Δ_s : s ∈ S} only.
std::vector<Mask> relative_congruence_points_from_s(Sublattice const& s);

// The unique frame hom h̃: 𝒞_S L -> M with h̃ ∘ ∇ = h. Requires h(s)
// complemented in M for every s in cf.s; throws PreconditionError naming
// the first offending element otherwise.
FrameHom extend_hom(FrameHom const& h, CongruenceFrame const& cf);
// For h: (L,S) -> (M,T) with h[S] ⊆ T, the hom h̄: 𝒞_S L -> 𝒞_T M with
// h̄(∇_a) = ∇_{h(a)} and h̄(Δ_s) = Δ_{h(s)}.
FrameHom extend_to_congruences(FrameHom const& h, CongruenceFrame const& src, CongruenceFrame const& dst);

// θ is generated by its restriction to S × S.
bool is_frith_congruence(Sublattice const& s, Congruence const& c);

}  // namespace pfw
