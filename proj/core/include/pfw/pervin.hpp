#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pfw/congruence.hpp"
#include "pfw/frame.hpp"
#include "pfw/hom.hpp"

namespace pfw {

// A subset of a Pervin universe, as a bit mask over point indices.
using Subset = std::uint32_t;

// A finite set with a bounded sublattice of its powerset. The lattice is kept
// sorted by (cardinality, mask). The empty space has lattice {∅}.
class PervinSpace {
 public:
  PervinSpace(std::vector<std::string> points, std::vector<Subset> lattice);

  std::size_t size() const { return points_.size(); }
  Subset all() const { return size() == 0 ? 0 : static_cast<Subset>((std::uint64_t{1} << size()) - 1); }
  std::vector<std::string> const& points() const { return points_; }
  std::vector<Subset> const& lattice() const { return lattice_; }
  bool contains(Subset s) const;
  std::string set_name(Subset s) const;
  bool operator==(PervinSpace const& o) const { return points_ == o.points_ && lattice_ == o.lattice_; }

 private:
  std::vector<std::string> points_;
  std::vector<Subset> lattice_;
};

using PervinPtr = std::shared_ptr<PervinSpace const>;

PervinPtr make_pervin(std::vector<std::string> points, std::vector<Subset> lattice);
// Points named x0, x1, ...
PervinPtr make_pervin(std::size_t n, std::vector<Subset> lattice);
PervinPtr discrete_pervin(std::size_t n);
PervinPtr indiscrete_pervin(std::size_t n);

struct PervinMap {
  PervinPtr dom;
  PervinPtr cod;
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t x) const { return map[x]; }
  Subset preimage(Subset t) const;
  Subset image(Subset s) const;
  bool operator==(PervinMap const& o) const { return dom == o.dom && cod == o.cod && map == o.map; }
};

bool is_pervin_map(PervinMap const& f);
PervinMap identity_map(PervinPtr const& x);
PervinMap compose(PervinMap const& g, PervinMap const& f);
// All Pervin maps x -> y.
std::vector<PervinMap> enumerate_pervin_maps(PervinPtr const& x, PervinPtr const& y);

// The topology generated by the lattice, as a frame; equal to the lattice on
// a finite universe (checked). element[i] is the frame element of lattice[i].
struct OmegaFrame {
  FramePtr frame;
  std::vector<Element> element;
  Element of(PervinSpace const& x, Subset s) const;
};
OmegaFrame omega_topology(PervinPtr const& x);

// Points are distinguished by the lattice.
bool is_t0(PervinSpace const& x);

struct PervinMorphismReport {
  bool is_injective = false;
  bool is_surjective = false;
  bool is_mono = false;
  bool is_epi = false;
  bool is_extremal_mono = false;
  bool is_iso = false;
  bool dom_t0 = false;
  bool cod_t0 = false;
};
PervinMorphismReport morphism_predicates(PervinMap const& f);

// Boolean subalgebra of 𝒫(X) generated by the lattice.
PervinPtr psym(PervinPtr const& x);
bool is_symmetric(PervinSpace const& x);

struct Skula {
  std::vector<Subset> topology;
  bool is_discrete = false;
};
Skula skula(PervinPtr const& x);

struct Subspace {
  PervinPtr space;
  PervinMap inclusion;
};
Subspace subspace(PervinPtr const& x, Subset y);

// m is the equalizer of the two maps into the indiscrete 2-point space
// (constant 1, and the indicator of m[X]).
bool equalizer_reproduces(PervinMap const& m);

// The congruence on Ω_𝒮(X) generated by {(S₁,S₂) : S₁∩Y = S₂∩Y}.
Congruence theta_Y(PervinPtr const& x, OmegaFrame const& omega, Subset y);

struct TdReport {
  bool pervin_td = false;          // (1)
  bool theta_injective = false;    // (2)
  bool no_trivial_point = false;   // (3)
  bool skula_discrete = false;     // (4)
  bool agree() const {
    return pervin_td == theta_injective && theta_injective == no_trivial_point && no_trivial_point == skula_discrete;
  }
};
TdReport td_suite(PervinPtr const& x);

// Categorical predicates decided by quantifying over a finite catalog of
// test objects. Results for morphism lists and epis are memoized per object.
class PervinOracle {
 public:
  explicit PervinOracle(std::vector<PervinPtr> catalog);

  std::vector<PervinPtr> const& catalog() const { return catalog_; }
  bool is_epi(PervinMap const& f);
  bool is_mono(PervinMap const& f);
  bool is_iso(PervinMap const& f);
  // Every factorization m = g ∘ e with e an epi through a catalog object has
  // e an iso, and m is a mono.
  bool is_extremal_mono(PervinMap const& m);

 private:
  std::vector<PervinMap> const& maps(PervinPtr const& x, PervinPtr const& y);

  std::vector<PervinPtr> catalog_;
  std::map<std::pair<PervinSpace const*, PervinSpace const*>, std::vector<PervinMap>> maps_;
  std::map<std::pair<std::pair<PervinSpace const*, PervinSpace const*>, std::vector<std::size_t>>, bool> epi_;
};

}  // namespace pfw
