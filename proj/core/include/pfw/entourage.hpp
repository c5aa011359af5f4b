#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfw/congruence.hpp"
#include "pfw/frame.hpp"
#include "pfw/hom.hpp"
#include "pfw/sublattice.hpp"

namespace pfw {

// A saturated down-set of L × M: closed under joins in each coordinate,
// which forces L × {0} and {0} × M in. Pair (x, y) is bit x * |M| + y.
class CIdeal {
 public:
  CIdeal() = default;
  // `pairs` must already be saturated; use cideal_generated otherwise.
  CIdeal(FramePtr left, FramePtr right, Bits pairs);

  FramePtr const& left() const { return left_; }
  FramePtr const& right() const { return right_; }
  Bits const& bits() const { return bits_; }
  bool contains(Element x, Element y) const { return bits_.test(x * right_->size() + y); }
  std::vector<std::pair<Element, Element>> pairs() const;
  // Largest x with (x, y) in the ideal, and largest y with (x, y) in it.
  Element column_max(Element y) const;
  Element row_max(Element x) const;
  bool leq(CIdeal const& o) const { return bits_.subset_of(o.bits_); }
  bool operator==(CIdeal const& o) const { return bits_ == o.bits_; }

 private:
  FramePtr left_;
  FramePtr right_;
  Bits bits_;
};

struct CIdealHash {
  std::size_t operator()(CIdeal const& c) const { return c.bits().hash(); }
};

// J.1-J.3 on an arbitrary pair set.
bool is_cideal(FiniteFrame const& left, FiniteFrame const& right, Bits const& pairs);
// Least C-ideal containing the seed.
CIdeal cideal_saturate(FramePtr const& left, FramePtr const& right, Bits seed);
CIdeal cideal_generated(FramePtr const& left, FramePtr const& right,
                        std::vector<std::pair<Element, Element>> const& seed);
CIdeal cideal_generated(FramePtr const& l, std::vector<std::pair<Element, Element>> const& seed);

// a ⊕ b; checked against ↓(a,b) ∪ (L × {0}) ∪ ({0} × M).
CIdeal oplus(FramePtr const& left, FramePtr const& right, Element a, Element b);
CIdeal oplus(FramePtr const& l, Element a, Element b);
CIdeal cideal_bottom(FramePtr const& l);
CIdeal cideal_top(FramePtr const& l);

CIdeal cideal_meet(CIdeal const& a, CIdeal const& b);
CIdeal cideal_join(CIdeal const& a, CIdeal const& b);
CIdeal inverse(CIdeal const& a);
// A ∘ B = ⋁{x ⊕ y : ∃ c ≠ 0, (x,c) ∈ A, (c,y) ∈ B}.
CIdeal compose(CIdeal const& a, CIdeal const& b);

// ⋁{a : (a,a) ∈ E}.
Element diagonal_join(CIdeal const& e);

struct EntouragePredicates {
  bool is_entourage = false;
  bool is_transitive = false;
  // Contains some ⋁ cᵢ ⊕ cᵢ with ⋁ cᵢ = 1.
  bool is_finite = false;
  bool is_symmetric = false;
  CIdeal inverse;
};
EntouragePredicates entourage_predicates(CIdeal const& e);

// E_r = {(x,y) : x ≤ r or y ≤ r*}, checked equal to (r⊕1) ∪ (1⊕r*) and to
// be a C-ideal. An entourage exactly when r is complemented.
CIdeal e_r(FramePtr const& l, Element r);

// Image of a C-ideal under h ⊕ h.
CIdeal image(FrameHom const& h, CIdeal const& e);

// A filter of entourages given by a finite basis. Its members are the
// C-ideals containing some finite intersection of basis members, that is,
// containing min().
struct QuasiUniformity {
  FramePtr frame;
  std::vector<CIdeal> basis;

  CIdeal min() const;
  bool contains(CIdeal const& e) const { return min().leq(e); }
};

// Closes a family under pairwise intersection; throws CapExceeded past
// caps().max_cideals.
std::vector<CIdeal> close_under_meets(std::vector<CIdeal> family);

struct WitnessRelations {
  // (b, a) with b ⊲ᵢ a.
  std::vector<std::pair<Element, Element>> lhd1;
  std::vector<std::pair<Element, Element>> lhd2;
  std::vector<Element> l1;
  std::vector<Element> l2;
};
// b ⊲₁ a iff A ∘ (b⊕b) ⊆ a⊕a for some A in the family, b ⊲₂ a iff
// (b⊕b) ∘ A ⊆ a⊕a; ℒᵢ = {a : a = ⋁{b : b ⊲ᵢ a}}.
WitnessRelations witness_relations(FramePtr const& l, std::vector<CIdeal> const& family);

struct QuReport {
  bool basis_entourages = false;
  bool filter_basis = false;
  bool qu1 = false;
  // Checked literally on the basis.
  bool qu2 = false;
  bool qu3 = false;
  bool qu4 = false;
  bool is_transitive = false;
  bool is_totally_bounded = false;
  bool is_quasi_uniformity() const { return qu1 && qu2 && qu3; }
  bool is_uniformity() const { return is_quasi_uniformity() && qu4; }
};
QuReport qu_report(QuasiUniformity const& q);

// Mutual refinement of two filter bases.
bool filters_equal(QuasiUniformity const& a, QuasiUniformity const& b);

// ℰ_R: basis of finite intersections of {E_r : r ∈ R}. Throws
// PreconditionError for a non-complemented member. Checks ℒ₁ = ⟨R⟩_Frm and
// ℒ₂ = ⟨R*⟩_Frm and throws Error on a mismatch.
QuasiUniformity filter_from_sublattice(FramePtr const& k, std::vector<Element> const& r);

struct ImageFilter {
  std::vector<CIdeal> images;
  // (h⊕h)[ℰ] ⊆ ℱ.
  bool into_target = false;
  // ℱ is contained in the filter generated by (h⊕h)[ℰ].
  bool target_generated = false;
};
ImageFilter image_filter(FrameHom const& h, QuasiUniformity const& source, QuasiUniformity const& target);
bool is_quniform_hom(FrameHom const& h, QuasiUniformity const& source, QuasiUniformity const& target);

struct PartitionWitness {
  CIdeal entourage;
  std::vector<Element> partition;
  std::vector<Element> r;
  std::vector<Element> r_star;
};
struct ExtractedR {
  Sublattice r;
  std::vector<PartitionWitness> witnesses;
};
// R_(K,ℰ) and the partition construction for every transitive basis
// member. Throws PreconditionError unless q is transitive and totally
// bounded; throws Error when the construction fails to reproduce E.
ExtractedR extract_R(QuasiUniformity const& q);
// The partition construction on one transitive finite entourage.
PartitionWitness partition_witness(CIdeal const& e);

// (𝒞_S L, ℰ_S) for the Frith frame (L, S).
struct FrithQuni {
  CongruenceFrame cf;
  QuasiUniformity q;
};
FrithQuni frith_to_quni(Sublattice const& s);
// h̄ for h: (L,S) -> (M,T), checked to be a quasi-uniform homomorphism.
FrameHom frith_to_quni_hom(FrameHom const& h, FrithQuni const& src, FrithQuni const& dst);

struct Gamma {
  Materialized l;
  Sublattice s;
  FrithQuni source;
  FrameHom hom;
  bool dense = false;
  bool surjective = false;
  bool quniform = false;
  bool extremal = false;
  bool is_iso = false;
};
Gamma gamma(QuasiUniformity const& q);

QuasiUniformity uniform_reflection(QuasiUniformity const& q);

// The reflection of ℰ_S compared with ℰ_{S̄}, where S̄ is generated by
// {∇_s, Δ_s : s ∈ S}.
struct SymSquare {
  QuasiUniformity reflected;
  QuasiUniformity from_sbar;
  bool equal = false;
};
SymSquare sym_square(FrithQuni const& fq);

struct CoreflectionReport {
  std::size_t quniform_homs = 0;
  std::size_t frith_homs = 0;
  bool injective = false;
  bool bijective = false;
  std::string witness;
};
// For (K,ℰ) and a Frith frame (M,T): quasi-uniform homs (𝒞_T M, ℰ_T) -> (K,ℰ)
// against Frith homs (M,T) -> (L,S) sent to γ ∘ ḡ.
CoreflectionReport coreflection_check(QuasiUniformity const& q, Gamma const& g, Sublattice const& t);

}  // namespace pfw
