#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfw/congruence.hpp"
#include "pfw/entourage.hpp"
#include "pfw/frame.hpp"
#include "pfw/frith.hpp"
#include "pfw/hom.hpp"
#include "pfw/sublattice.hpp"

namespace pfw {

// The ideals of the lattice formed by `base`, ordered by inclusion.
struct IdealLattice {
  Sublattice base;
  FramePtr frame;
  // ideal[e] is the ideal (a set of parent elements) for frame element e.
  std::vector<Bits> ideal;
  // principal[i] is the element ↓s for s = base.members()[i].
  std::vector<Element> principal;
};
// Enumerates ideals without assuming principality, then asserts every ideal
// is principal. Element names are the generator names.
IdealLattice ideal_lattice(Sublattice const& s);

// ĥ(J) = ⋁ h[J] for a bounded lattice hom h given on base.members() (by
// position). Throws PreconditionError unless h is a lattice hom.
FrameHom ideal_extension(IdealLattice const& il, FramePtr const& m, std::vector<Element> const& h);

struct CMap {
  FrithFrame f;
  IdealLattice il;
  // (Idl(S), S).
  FrithFrame idl;
  // c(J) = ⋁J.
  FrithHom c;
  // c*(a) = ↓a ∩ S, as an element of il.frame.
  std::vector<Element> c_star;
};
// Asserts the Galois law, c ∘ c* = id and that c is a dense extremal epi.
CMap c_and_c_star(FrithFrame const& f);

struct LambdaMap {
  CMap cm;
  // 𝒞_S Idl(S).
  CongruenceFrame cf;
  // λ(a) = ∇_{c*(a)}.
  std::vector<Element> map;
};
// Asserts that λ is a Cauchy map.
LambdaMap lambda_map(FrithFrame const& f);

struct CauchyCandidate {
  FrithFrame dom;
  FramePtr cod;
  std::vector<Element> map;
};

struct QuniCauchyReport {
  bool bounded_meet = false;
  bool covered = false;
  bool uniform_cover = false;
  bool is_cauchy() const { return bounded_meet && covered && uniform_cover; }
};
// Cauchy conditions for a quasi-uniform frame given by a basis.
QuniCauchyReport quni_cauchy(QuasiUniformity const& q, FramePtr const& m, std::vector<Element> const& map);

struct CauchyReport {
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  bool is_frame_hom = false;
  // Present when the domain is symmetric; asserted equal to is_cauchy().
  std::optional<QuniCauchyReport> quni;
  bool is_cauchy() const { return c1 && c2 && c3; }
};
CauchyReport is_cauchy(CauchyCandidate const& phi);

// All maps satisfying C.1-C.3: lattice homs on S first, C.2 fixes the rest.
// Throws CapExceeded when |L| or |M| exceeds caps().max_enum_size.
std::vector<CauchyCandidate> enumerate_cauchy(FrithFrame const& f, FramePtr const& m);

// g: 𝒞_S Idl(S) -> M with g ∘ λ = φ. Throws PreconditionError unless φ is
// Cauchy, and Error if the square fails.
FrameHom factor_cauchy(LambdaMap const& lam, CauchyCandidate const& phi);

struct CompletenessReport {
  bool coherent = false;
  bool fsym_coherent = false;
  bool fsym_compact = false;
  // Every Cauchy map into a catalog codomain is a frame hom.
  bool cauchy_complete = false;
  // Every dense extremal epi onto fsym from a symmetric catalog object is
  // an iso.
  bool complete_by_definition = false;
  bool agree = false;
  bool c_dense_extremal = false;
  bool c_c_star_identity = false;
  std::size_t cauchy_maps = 0;
  bool cauchy_factor = false;
  // The factorization through the symmetric reflection of c.
  bool reflection_factor = false;
  // Every dense extremal epi c: (M,T) -> (L,S) from a catalog object whose
  // extension to the congruence frames is still dense factors as c ∘ ĉ
  // with ĉ a unique iso onto (Idl(S), S).
  bool unique_completion = false;
  // The same without the density condition on the extension. This fails
  // as soon as the catalog has a larger frame mapping densely onto L, e.g.
  // C3 -> 2.
  bool literal_unique_completion = false;
  std::string witness;
  bool ok() const {
    return agree && c_dense_extremal && c_c_star_identity && cauchy_factor && reflection_factor && unique_completion;
  }
};
CompletenessReport completeness_suite(FrithFrame const& f, std::vector<FrithFrame> const& catalog);

}  // namespace pfw
