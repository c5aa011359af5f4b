#pragma once

#include <string>
#include <vector>

#include "pfw/frame.hpp"
#include "pfw/frith.hpp"
#include "pfw/hom.hpp"
#include "pfw/pervin.hpp"

namespace pfw {

// A frame hom p: L -> 2, held with its prime filter p⁻¹(1).
struct Point {
  FrameHom hom;
  Bits filter;
  // Name of the join-irreducible j with p⁻¹(1) = ↑j.
  std::string name;
};

struct Spectrum {
  FramePtr frame;
  FramePtr two;
  std::vector<Point> points;
  // â = {p : p(a) = 1}.
  Subset hat(Element a) const;
  // Index of the point whose hom has this map, if any.
  std::optional<std::size_t> find(std::vector<Element> const& map) const;
};
// Prime filters found among all filters, cross-checked against the homs
// L -> 2.
Spectrum points(FramePtr const& l);

struct PtFrith {
  FrithFrame f;
  Spectrum sp;
  // (pt L, {ŝ : s ∈ S}).
  PervinPtr space;
};
PtFrith pt_frith(FrithFrame const& f);
// pt(h): pt(cod) -> pt(dom), p ↦ p ∘ h; asserts pt(h)⁻¹(ŝ) = h(s)^.
PervinMap pt_map(FrithHom const& h, PtFrith const& of_cod, PtFrith const& of_dom);

struct OmegaFrith {
  PervinPtr space;
  OmegaFrame omega;
  FrithFrame f;
  // The subset an element of the frame stands for.
  std::vector<Subset> subset;
};
OmegaFrith omega_frith(PervinPtr const& x);
// Ω(g): Ω(cod) -> Ω(dom), T ↦ g⁻¹(T).
FrithHom omega_map(PervinMap const& g, OmegaFrith const& of_dom, OmegaFrith const& of_cod);

struct AdjunctionReport {
  std::size_t pervin_maps = 0;
  std::size_t frith_homs = 0;
  bool bijection = false;
  // Counit a ↦ â is an iso of Frith frames.
  bool spatial = false;
  // Unit x ↦ (U ↦ [x ∈ U]) is an iso of Pervin spaces.
  bool sober = false;
  bool t0 = false;
  std::string witness;
};
// Perv(x, pt f) against Frith(f, Ω x), both enumerated.
AdjunctionReport adjunction_check(PervinPtr const& x, FrithFrame const& f);
// The unit and counit on their own.
PervinMap adjunction_unit(PervinPtr const& x);
FrithHom adjunction_counit(FrithFrame const& f);

struct AlphaData {
  PtFrith pt;
  PervinPtr psym_pt;
  Fsym fs;
  PtFrith pt_sym;
  // psym(pt f) -> pt(fsym f), p ↦ the unique p̃ with p̃ ∘ ∇ = p.
  PervinMap alpha;
  bool bijective = false;
  bool is_iso = false;
  // α⁻¹(∇_s^) = ŝ and α⁻¹(Δ_s^) = X ∖ ŝ for all s.
  bool preimages = false;
};
AlphaData alpha_check(FrithFrame const& f);
// α_f ∘ pt(h) = pt(h̄) ∘ α_g for h: f -> g.
bool alpha_natural(FrithHom const& h, AlphaData const& df, AlphaData const& dg);

}  // namespace pfw
