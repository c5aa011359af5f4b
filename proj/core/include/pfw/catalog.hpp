#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pfw/frame.hpp"
#include "pfw/frith.hpp"
#include "pfw/pervin.hpp"
#include "pfw/poset.hpp"

namespace pfw {

using Rng = std::mt19937_64;

struct NamedFrame {
  std::string name;
  FramePtr frame;
};

// All posets on n points, one per isomorphism class.
std::vector<Poset> posets_up_to_iso(std::size_t n);

// Distributive lattices with at most max_elements elements, up to iso. The
// default gives 13 frames, the trivial one included.
std::vector<NamedFrame> frame_catalog(std::size_t max_elements = 6);
// Frames with at most max_ji join-irreducibles, up to iso (9 for 3).
std::vector<NamedFrame> ji_catalog(std::size_t max_ji = 3);
// (L, L) for each catalog frame.
std::vector<FrithFrame> frith_catalog(std::vector<NamedFrame> const& frames);

// Every Pervin space on x0..x(n-1) for n ≤ max_n, all bounded sublattices,
// the empty space included.
std::vector<PervinPtr> pervin_catalog(std::size_t max_n = 3);
// Bounded sublattices of 𝒫(n).
std::vector<PervinPtr> pervin_spaces(std::size_t n);

Poset random_poset(Rng& rng, std::size_t n, double edge_probability = 0.35);
// random_poset with its points shuffled, so every labelled poset on n
// points can occur.
Poset random_labelled_poset(Rng& rng, std::size_t n, double edge_probability = 0.35);
// 1..max_ji join-irreducibles.
FramePtr random_frame(Rng& rng, std::size_t max_ji);
// A random family of subsets closed under ∪ and ∩.
PervinPtr random_pervin(Rng& rng, std::size_t n);

// A frame K with a set R of complemented elements.
struct QuniInstance {
  FramePtr k;
  std::vector<Element> r;
};
// K is Boolean, a product of two random frames, or a random frame, in
// rotation; R is a random subset of B(K) with at most max_r members.
QuniInstance random_quni_instance(Rng& rng, std::size_t max_ji, std::size_t max_r = 4);

// Every bounded sublattice of l, by subset enumeration of the middle
// elements (l must have at most 20 elements).
std::vector<Sublattice> all_sublattices(FramePtr const& l);

}  // namespace pfw
