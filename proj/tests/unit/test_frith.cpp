#include <doctest.h>

#include "oracles.hpp"
#include "pfw/pfw.hpp"

using namespace pfw;

namespace {

FrithFrame fr(FramePtr const& l) { return make_frith(l); }

bool frith_iso(FrithFrame const& a, FrithFrame const& b) { return find_frith_isomorphism(a, b).has_value(); }

}  // namespace

TEST_SUITE("frith") {
  TEST_CASE("finite Frith frames use the whole frame") {
    auto d4 = diamond_frame();
    CHECK(make_frith(d4).s.is_full());
    CHECK_THROWS_AS(make_frith(Sublattice(d4, {0, d4->parse("a"), d4->top()})), InvalidInput);
  }

  TEST_CASE("morphism predicates") {
    auto c3 = fr(chain_frame(3)), two = fr(two_frame());
    auto id = morphism_predicates(frith_identity(c3));
    CHECK(id.is_iso);
    auto up = morphism_predicates(make_frith_hom(c3, two, FrameHom{c3.frame, two.frame, {0, 1, 1}}));
    CHECK(up.is_extremal_epi);
    CHECK(up.is_regular_epi);
    auto inc = morphism_predicates(make_frith_hom(two, c3, FrameHom{two.frame, c3.frame, {0, 2}}));
    CHECK(inc.is_mono);
    CHECK_FALSE(inc.is_extremal_epi);
  }

  TEST_CASE("predicates agree with the categorical oracle") {
    std::vector<FrithFrame> cat;
    for (auto const& nf : frame_catalog(4)) cat.push_back(fr(nf.frame));
    FrithOracle o(cat);
    for (auto const& a : cat)
      for (auto const& b : cat)
        for (auto const& h : enumerate_frith_homs(a, b)) {
          auto p = morphism_predicates(h);
          CHECK(p.is_mono == o.is_mono(h));
          CHECK(p.is_extremal_epi == o.is_extremal_epi(h));
          CHECK(p.is_regular_epi == o.is_regular_epi(h));
          CHECK(p.is_iso == o.is_iso(h));
        }
  }

  TEST_CASE("products") {
    auto two = fr(two_frame());
    CHECK(frith_iso(product(two, two).obj, fr(diamond_frame())));
    auto c3 = fr(chain_frame(3));
    CHECK(frith_iso(product(c3, fr(trivial_frame())).obj, c3));
    CHECK(product(c3, two).obj.frame->size() == 6);
  }

  TEST_CASE("equalizers") {
    auto d4 = fr(diamond_frame()), two = fr(two_frame());
    auto homs = enumerate_frith_homs(d4, two);
    REQUIRE(homs.size() == 2);
    auto same = equalizer(homs[0], homs[0]);
    CHECK(same.obj.frame->size() == 4);
    auto diff = equalizer(homs[0], homs[1]);
    CHECK(diff.obj.frame->size() == 2);
    CHECK(diff.e.hom.map == std::vector<Element>{d4.frame->bottom(), d4.frame->top()});
  }

  TEST_CASE("coproducts") {
    auto two = fr(two_frame());
    // TWO is initial, so it is the unit of the coproduct.
    CHECK(frith_iso(coproduct(two, two).obj, two));
    for (auto const& nf : frame_catalog(5)) {
      auto x = fr(nf.frame);
      CHECK(frith_iso(coproduct(x, two).obj, x));
      CHECK(frith_iso(coproduct(two, x).obj, x));
    }
    auto c3 = fr(chain_frame(3));
    CHECK(frith_iso(coproduct(c3, two).obj, c3));
    CHECK(coproduct(c3, c3).obj.frame->size() == oracle::cideals(*c3.frame, *c3.frame).size());
  }

  TEST_CASE("coequalizers") {
    auto c3 = fr(chain_frame(3)), d4 = fr(diamond_frame());
    auto homs = enumerate_frith_homs(c3, d4);
    auto h = homs.front();
    CHECK(coequalizer(h, h).obj.frame->size() == 4);
    Element a = d4.frame->parse("a"), b = d4.frame->parse("b");
    std::optional<FrithHom> ha, hb;
    for (auto const& g : homs) {
      if (g(1) == a) ha = g;
      if (g(1) == b) hb = g;
    }
    REQUIRE(ha);
    REQUIRE(hb);
    // a ≡ b forces a = a ∧ a ≡ a ∧ b = 0, so everything collapses.
    auto q = coequalizer(*ha, *hb);
    CHECK(q.obj.frame->size() == 1);

    auto auts = enumerate_frith_homs(d4, d4);
    for (auto const& iso : auts) {
      if (!morphism_predicates(iso).is_iso) continue;
      auto g = compose(iso, *ha);
      CHECK(coequalizer(*ha, *ha).obj.frame->size() == coequalizer(g, g).obj.frame->size());
    }
  }

  TEST_CASE("symmetric reflection") {
    auto two = fr(two_frame());
    CHECK(frith_iso(fsym(two).obj, two));
    auto c3 = fr(chain_frame(3));
    auto s = fsym(c3);
    CHECK(frith_iso(s.obj, fr(diamond_frame())));
    CHECK(is_symmetric(s.obj));
    for (auto const& nf : frame_catalog(6)) {
      auto f = fsym(fr(nf.frame));
      CHECK(frith_iso(fsym(f.obj).obj, f.obj));
    }
  }

  TEST_CASE("Boolean coreflection") {
    auto bc = boolean_core(fr(chain_frame(3)));
    CHECK(bc.obj.frame->size() == 2);
    auto d4 = fr(diamond_frame());
    CHECK(frith_iso(boolean_core(d4).obj, d4));
    auto b3 = fr(boolean_frame(3));
    CHECK(frith_iso(boolean_core(b3).obj, b3));
  }

  TEST_CASE("ideal functor") {
    for (auto const& l : {two_frame(), chain_frame(3), diamond_frame()}) {
      auto idl = idl_functor(Sublattice::full(l));
      CHECK(frith_iso(idl.obj, fr(l)));
    }
  }

  TEST_CASE("object predicates") {
    auto c3 = frith_predicates(fr(chain_frame(3)));
    CHECK(c3.is_coherent);
    CHECK(c3.is_compact);
    CHECK_FALSE(c3.is_zero_dimensional);
    CHECK_FALSE(c3.is_symmetric);
    for (auto const& l : {diamond_frame(), two_frame()}) {
      auto p = frith_predicates(fr(l));
      CHECK(p.is_coherent);
      CHECK(p.is_compact);
      CHECK(p.is_zero_dimensional);
      CHECK(p.is_symmetric);
    }
  }

  TEST_CASE("proximity") {
    for (auto const& nf : frame_catalog(6)) {
      auto const& l = *nf.frame;
      auto prox = proximity(fr(nf.frame));
      std::set<std::pair<Element, Element>> got(prox.begin(), prox.end());
      for (Element a = 0; a < l.size(); ++a)
        for (Element b = 0; b < l.size(); ++b) CHECK(got.count({a, b}) == (l.leq(a, b) ? 1U : 0U));
    }
  }

  TEST_CASE("property: universal properties of limits and colimits") {
    std::vector<FrithFrame> cat;
    for (auto const& nf : frame_catalog(4)) cat.push_back(fr(nf.frame));
    for (auto const& a : cat)
      for (auto const& b : cat) {
        auto p = product(a, b);
        auto co = coproduct(a, b);
        for (auto const& z : cat) {
          for (auto const& f1 : enumerate_frith_homs(z, a))
            for (auto const& f2 : enumerate_frith_homs(z, b)) {
              auto pr = pairing(p, f1, f2);
              CHECK(compose(p.p1, pr).hom == f1.hom);
              CHECK(compose(p.p2, pr).hom == f2.hom);
            }
          for (auto const& g1 : enumerate_frith_homs(a, z))
            for (auto const& g2 : enumerate_frith_homs(b, z)) {
              auto cp = copairing(co, g1, g2);
              CHECK(compose(cp, co.i1).hom == g1.hom);
              CHECK(compose(cp, co.i2).hom == g2.hom);
            }
        }
      }
  }
}
