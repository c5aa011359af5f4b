#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfw/congruence.hpp"
#include "pfw/entourage.hpp"
#include "pfw/frame.hpp"
#include "pfw/hom.hpp"
#include "pfw/sublattice.hpp"

namespace pfw {

// A frame with a join-dense bounded sublattice. On a finite frame a
// join-dense sublattice is the whole frame, and make_frith asserts this.
struct FrithFrame {
  FramePtr frame;
  Sublattice s;
};

// Throws InvalidInput unless s is join-dense; throws Error if a join-dense
// s is not the whole frame.
FrithFrame make_frith(Sublattice const& s);
FrithFrame make_frith(FramePtr const& l);

struct FrithHom {
  FrithFrame dom;
  FrithFrame cod;
  FrameHom hom;
  Element operator()(Element a) const { return hom(a); }
};

// Throws InvalidInput unless h is a frame hom with h[S] ⊆ T.
FrithHom make_frith_hom(FrithFrame const& dom, FrithFrame const& cod, FrameHom const& h);
FrithHom frith_identity(FrithFrame const& f);
FrithHom compose(FrithHom const& g, FrithHom const& f);
std::vector<FrithHom> enumerate_frith_homs(FrithFrame const& dom, FrithFrame const& cod);

struct FrithMorphismReport {
  bool is_mono = false;
  bool is_extremal_epi = false;
  bool is_iso = false;
  bool is_regular_epi = false;
  bool is_dense = false;
};
FrithMorphismReport morphism_predicates(FrithHom const& h);

// Categorical predicates by quantifying over a finite catalog of objects.
class FrithOracle {
 public:
  explicit FrithOracle(std::vector<FrithFrame> catalog);

  std::vector<FrithFrame> const& catalog() const { return catalog_; }
  bool is_mono(FrithHom const& h);
  bool is_epi(FrithHom const& h);
  bool is_iso(FrithHom const& h);
  // Epi, and every factorization h = m ∘ g with m a mono has m an iso.
  bool is_extremal_epi(FrithHom const& h);
  // h is the coequalizer of some parallel pair out of a catalog object.
  bool is_regular_epi(FrithHom const& h);

 private:
  std::vector<FrithHom> const& homs(FrithFrame const& a, FrithFrame const& b);

  std::vector<FrithFrame> catalog_;
  std::map<std::pair<FiniteFrame const*, FiniteFrame const*>, std::vector<FrithHom>> homs_;
};

struct Product {
  FrithFrame obj;
  FrithHom p1;
  FrithHom p2;
};
Product product(FrithFrame const& a, FrithFrame const& b);
// ⟨f1, f2⟩: the unique map with p_i ∘ ⟨f1, f2⟩ = f_i.
FrithHom pairing(Product const& p, FrithHom const& f1, FrithHom const& f2);

struct Equalizer {
  FrithFrame obj;
  FrithHom e;
};
Equalizer equalizer(FrithHom const& h1, FrithHom const& h2);
// Factors g through e; throws PreconditionError unless h1 ∘ g = h2 ∘ g.
FrithHom equalizer_factor(Equalizer const& eq, FrithHom const& g);

struct Coproduct {
  FrithFrame obj;
  FrithHom i1;
  FrithHom i2;
  // ideal[e] is the C-ideal over L1 × L2 that element e stands for.
  std::vector<CIdeal> ideal;
};
Coproduct coproduct(FrithFrame const& a, FrithFrame const& b);
// [g1, g2](A) = ⋁{g1(x) ∧ g2(y) : (x,y) ∈ A}.
FrithHom copairing(Coproduct const& c, FrithHom const& g1, FrithHom const& g2);

struct Coequalizer {
  FrithFrame obj;
  FrithHom q;
  Congruence kernel;
};
Coequalizer coequalizer(FrithHom const& h1, FrithHom const& h2);
// Factors g through q; throws PreconditionError unless g ∘ h1 = g ∘ h2.
FrithHom coequalizer_factor(Coequalizer const& c, FrithHom const& g);

struct Fsym {
  CongruenceFrame cf;
  FrithFrame obj;
  // ∇: (L,S) -> (𝒞_S L, S̄).
  FrithHom unit;
};
// Asserts S̄ Boolean and join-dense.
Fsym fsym(FrithFrame const& f);
// The unique ĝ with ĝ ∘ ∇ = g for g into a symmetric Frith frame.
FrithHom fsym_factor(Fsym const& fs, FrithHom const& g);

struct BooleanCore {
  FrithFrame obj;
  // (N,C) ↪ (L,S).
  FrithHom counit;
};
BooleanCore boolean_core(FrithFrame const& f);
// The unique factorization of g from a symmetric Frith frame through the
// counit.
FrithHom boolean_core_factor(BooleanCore const& bc, FrithHom const& g);

struct IdlFrith {
  FrithFrame obj;
  // principal[i] is ↓s for s = members()[i] of the input lattice.
  std::vector<Element> principal;
};
// (Idl(S), S) for the lattice formed by s. Asserts S is exactly the set of
// compact elements.
IdlFrith idl_functor(Sublattice const& s);

struct FrithPredicates {
  bool is_compact = false;
  bool is_coherent = false;
  bool is_zero_dimensional = false;
  bool is_symmetric = false;
  std::vector<Element> compact_elements;
};
// Coherent: S consists of compact elements; throws Error if then S ≠ K(L).
FrithPredicates frith_predicates(FrithFrame const& f);

bool is_symmetric(FrithFrame const& f);

// a ⊲_S b iff a ≤ s ≤ b for some s ∈ S. Asserts interpolation and that S
// is the set of reflexive points.
std::vector<std::pair<Element, Element>> proximity(FrithFrame const& f);

// An isomorphism of Frith frames: a frame iso carrying S onto T.
std::optional<FrithHom> find_frith_isomorphism(FrithFrame const& a, FrithFrame const& b);

}  // namespace pfw
