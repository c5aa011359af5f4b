#include <doctest.h>

#include "oracles.hpp"
#include "pfw/pfw.hpp"

using namespace pfw;

namespace {

PervinPtr sierpinski() { return make_pervin({"x", "y"}, {0b00, 0b01, 0b11}); }

}  // namespace

TEST_SUITE("spectrum") {
  TEST_CASE("points") {
    CHECK(points(two_frame()).points.size() == 1);
    CHECK(points(chain_frame(3)).points.size() == 2);
    CHECK(points(diamond_frame()).points.size() == 2);
    for (auto const& nf : frame_catalog(6)) {
      auto sp = points(nf.frame);
      CHECK(sp.points.size() == oracle::prime_filter_count(*nf.frame));
      // Points of a finite distributive lattice correspond to its
      // join-irreducibles.
      CHECK(sp.points.size() == nf.frame->join_irreducibles().size());
    }
  }

  TEST_CASE("spaces of points") {
    auto t = pt_frith(make_frith(two_frame()));
    CHECK(t.space->size() == 1);
    CHECK(t.space->lattice().size() == 2);
    auto c = pt_frith(make_frith(chain_frame(3)));
    CHECK(c.space->size() == 2);
    CHECK(c.space->lattice().size() == 3);
    auto d = pt_frith(make_frith(diamond_frame()));
    CHECK(d.space->lattice().size() == 4);
  }

  TEST_CASE("frames of opens") {
    auto fi = [](FrithFrame const& a, FrithFrame const& b) { return find_frith_isomorphism(a, b).has_value(); };
    CHECK(fi(omega_frith(sierpinski()).f, make_frith(chain_frame(3))));
    CHECK(fi(omega_frith(discrete_pervin(2)).f, make_frith(diamond_frame())));
    CHECK(fi(omega_frith(indiscrete_pervin(3)).f, make_frith(two_frame())));
  }

  TEST_CASE("adjunction") {
    for (auto const& nf : frame_catalog(6)) {
      auto r = adjunction_check(make_pervin(0, {0}), make_frith(nf.frame));
      CHECK(r.spatial);
    }
    auto s = adjunction_check(sierpinski(), make_frith(chain_frame(3)));
    CHECK(s.sober);
    CHECK(s.bijection);
    CHECK(s.pervin_maps == s.frith_homs);
    auto i = adjunction_check(indiscrete_pervin(2), make_frith(two_frame()));
    CHECK_FALSE(i.t0);
    CHECK_FALSE(i.sober);
    CHECK(i.bijection);
  }

  TEST_CASE("hom-set bijection against brute force") {
    for (auto const& x : pervin_catalog(2))
      for (auto const& nf : frame_catalog(4)) {
        auto f = make_frith(nf.frame);
        auto r = adjunction_check(x, f);
        auto om = omega_frith(x);
        CHECK(r.frith_homs == oracle::homs(*nf.frame, *om.f.frame).size());
        CHECK(r.bijection);
      }
  }

  TEST_CASE("alpha") {
    auto a2 = alpha_check(make_frith(two_frame()));
    CHECK(a2.alpha.dom->size() == 1);
    CHECK(a2.is_iso);
    auto c3 = make_frith(chain_frame(3)), two = make_frith(two_frame());
    auto a3 = alpha_check(c3);
    CHECK(a3.alpha.dom->size() == 2);
    CHECK(a3.alpha.cod->size() == 2);
    CHECK(a3.is_iso);
    CHECK(a3.preimages);
    auto h = make_frith_hom(c3, two, FrameHom{c3.frame, two.frame, {0, 1, 1}});
    CHECK(alpha_natural(h, a3, a2));
  }
}
