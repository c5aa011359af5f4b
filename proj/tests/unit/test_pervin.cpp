#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pfw/pfw.hpp"

using namespace pfw;

namespace {

PervinPtr sierpinski() { return make_pervin({"x", "y"}, {0b00, 0b01, 0b11}); }

// Every map of underlying sets, filtered by the preimage condition.
std::size_t brute_force_maps(PervinSpace const& x, PervinSpace const& y) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < x.size(); ++i) total *= y.size();
  if (x.size() == 0) total = 1;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> f(x.size());
    std::size_t c = code;
    for (auto& v : f) {
      v = c % y.size();
      c /= y.size();
    }
    bool ok = true;
    for (Subset t : y.lattice()) {
      Subset pre = 0;
      for (std::size_t p = 0; p < f.size(); ++p)
        if ((t >> f[p]) & 1U) pre |= Subset{1} << p;
      if (!x.contains(pre)) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("pervin") {
  TEST_CASE("topologies") {
    auto s = sierpinski();
    auto om = omega_topology(s);
    CHECK(om.frame->size() == 3);
    CHECK(isomorphic(om.frame, chain_frame(3)));
    CHECK(omega_topology(indiscrete_pervin(3)).frame->size() == 2);
    CHECK(omega_topology(discrete_pervin(3)).frame->size() == 8);
  }

  TEST_CASE("morphism predicates") {
    auto s = sierpinski();
    auto id = morphism_predicates(identity_map(s));
    CHECK(id.is_iso);

    auto sub = subspace(s, 0b01);
    CHECK(sub.space->lattice() == std::vector<Subset>{0b0, 0b1});
    auto inc = morphism_predicates(sub.inclusion);
    CHECK(inc.is_extremal_mono);
    CHECK(equalizer_reproduces(sub.inclusion));

    auto one = make_pervin({"z"}, {0b0, 0b1});
    PervinMap c{discrete_pervin(2), one, {0, 0}};
    REQUIRE(is_pervin_map(c));
    auto cr = morphism_predicates(c);
    CHECK(cr.is_epi);
    CHECK_FALSE(cr.is_mono);
  }

  TEST_CASE("maps agree with brute force") {
    auto cat = pervin_catalog(2);
    for (auto const& x : cat)
      for (auto const& y : cat) {
        if (y->size() == 0 && x->size() > 0) continue;
        CHECK(enumerate_pervin_maps(x, y).size() == brute_force_maps(*x, *y));
      }
  }

  TEST_CASE("symmetrization") {
    auto s = sierpinski();
    CHECK(*psym(s) == *make_pervin({"x", "y"}, {0b00, 0b01, 0b10, 0b11}));
    auto d = discrete_pervin(3);
    CHECK(*psym(d) == *d);
    auto i = indiscrete_pervin(3);
    CHECK(*psym(i) == *i);
  }

  TEST_CASE("Skula topology") {
    CHECK(skula(sierpinski()).is_discrete);
    auto ind = skula(indiscrete_pervin(2));
    CHECK_FALSE(ind.is_discrete);
    CHECK(ind.topology == std::vector<Subset>{0b00, 0b11});
    CHECK(skula(discrete_pervin(3)).is_discrete);
  }

  TEST_CASE("subspaces") {
    auto s = sierpinski();
    CHECK(morphism_predicates(subspace(s, s->all()).inclusion).is_iso);
    auto e = subspace(s, 0);
    CHECK(e.space->size() == 0);
    CHECK(e.space->lattice() == std::vector<Subset>{0});
    auto y = subspace(s, 0b10);
    CHECK(y.space->points() == std::vector<std::string>{"y"});
    CHECK(y.space->lattice() == std::vector<Subset>{0b0, 0b1});
  }

  TEST_CASE("theta_Y") {
    auto s = sierpinski();
    auto om = omega_topology(s);
    CHECK(theta_Y(s, om, s->all()).is_identity());
    CHECK(theta_Y(s, om, 0).is_all());
    auto t = theta_Y(s, om, 0b01);
    CHECK(t.related(om.of(*s, 0b01), om.of(*s, 0b11)));
    CHECK_FALSE(t.related(om.of(*s, 0b00), om.of(*s, 0b01)));
  }

  TEST_CASE("T_D conditions") {
    auto a = td_suite(sierpinski());
    CHECK(a.pervin_td);
    CHECK(a.theta_injective);
    CHECK(a.no_trivial_point);
    CHECK(a.skula_discrete);
    auto b = td_suite(indiscrete_pervin(2));
    CHECK_FALSE(b.pervin_td);
    CHECK_FALSE(b.theta_injective);
    CHECK_FALSE(b.no_trivial_point);
    CHECK_FALSE(b.skula_discrete);
    auto c = td_suite(discrete_pervin(3));
    CHECK(c.pervin_td);
    CHECK(c.skula_discrete);
  }

  TEST_CASE("catalog of Pervin spaces") {
    CHECK(pervin_spaces(0).size() == 1);
    CHECK(pervin_spaces(1).size() == 1);
    // Bounded sublattices of 2^2 containing the empty set and the universe.
    CHECK(pervin_spaces(2).size() == 4);
    for (auto const& x : pervin_spaces(3))
      for (Subset a : x->lattice())
        for (Subset b : x->lattice()) {
          CHECK(x->contains(a | b));
          CHECK(x->contains(a & b));
        }
  }

  TEST_CASE("property: random spaces") {
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
      auto x = random_pervin(rng, 4);
      CHECK(td_suite(x).agree());
      auto p = psym(x);
      CHECK(is_symmetric(*p));
      CHECK(*psym(p) == *p);
      for (Subset s : x->lattice()) {
        CHECK(p->contains(s));
        CHECK(p->contains(x->all() & ~s));
      }
      auto sk = skula(x);
      for (Subset s : x->lattice()) CHECK(std::find(sk.topology.begin(), sk.topology.end(), s) != sk.topology.end());
      CHECK(omega_topology(x).frame->size() == x->lattice().size());
    }
  }
}
