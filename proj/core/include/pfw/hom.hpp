#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfw/frame.hpp"
#include "pfw/sublattice.hpp"

namespace pfw {

struct FrameHom {
  FramePtr dom;
  FramePtr cod;
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
  bool operator==(FrameHom const& o) const { return dom == o.dom && cod == o.cod && map == o.map; }
};

struct HomReport {
  bool is_frame_hom = false;
  bool is_injective = false;
  bool is_surjective = false;
  // h(a) = 0 implies a = 0.
  bool is_dense = false;
  std::vector<Element> image;
  // First violated law, empty when is_frame_hom.
  std::string witness;
};

HomReport hom_validate(FrameHom const& h);
bool is_frame_hom(FrameHom const& h);

FrameHom identity_hom(FramePtr const& l);
// g ∘ f.
FrameHom compose(FrameHom const& g, FrameHom const& f);
// The hom determined by the images of the join-irreducibles of dom.
FrameHom hom_from_ji_images(FramePtr const& dom, FramePtr const& cod, std::vector<Element> const& ji_images);

std::optional<FrameHom> find_isomorphism(FramePtr const& a, FramePtr const& b);
bool isomorphic(FramePtr const& a, FramePtr const& b);

// All frame homomorphisms dom -> cod, by backtracking over images of the
// join-irreducibles in a linear extension.
std::vector<FrameHom> enumerate_homs(FramePtr const& dom, FramePtr const& cod);

// Homs whose image of every member of s lies in t (Frith-style constraint).
std::vector<FrameHom> enumerate_homs_preserving(Sublattice const& s, Sublattice const& t);

// Kernel pairs in element order: ker[a] = smallest b with h(a) = h(b).
std::vector<Element> kernel_labels(FrameHom const& h);

}  // namespace pfw
