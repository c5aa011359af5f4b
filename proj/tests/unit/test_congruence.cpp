#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pfw/pfw.hpp"

using namespace pfw;

namespace {

using Blocks = std::vector<std::vector<Element>>;

Blocks named_blocks(FramePtr const& l, std::vector<std::vector<std::string>> const& names) {
  Blocks out;
  for (auto const& b : names) {
    std::vector<Element> blk;
    for (auto const& n : b) blk.push_back(l->parse(n));
    std::sort(blk.begin(), blk.end());
    out.push_back(blk);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Blocks sorted_blocks(Congruence const& c) {
  auto b = c.blocks();
  for (auto& x : b) std::sort(x.begin(), x.end());
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("generated congruences") {
    auto c3 = chain_frame(3);
    Element m = c3->parse("m");
    CHECK(congruence_generated(c3, {}).is_identity());
    auto g = congruence_generated(c3, {{0, m}});
    CHECK(sorted_blocks(g) == named_blocks(c3, {{"0", "m"}, {"1"}}));
    CHECK(g == nabla(c3, m));
    CHECK(congruence_generated(c3, {{c3->bottom(), c3->top()}}).is_all());
  }

  TEST_CASE("nabla and delta") {
    for (auto const& l : {two_frame(), chain_frame(3), diamond_frame(), boolean_frame(3)}) {
      CHECK(nabla(l, l->bottom()).is_identity());
      CHECK(nabla(l, l->top()).is_all());
      CHECK(delta(l, l->top()).is_identity());
      CHECK(delta(l, l->bottom()).is_all());
    }
    auto c3 = chain_frame(3);
    CHECK(sorted_blocks(delta(c3, c3->parse("m"))) == named_blocks(c3, {{"0"}, {"m", "1"}}));
    auto d4 = diamond_frame();
    CHECK(sorted_blocks(nabla(d4, d4->parse("a"))) == named_blocks(d4, {{"0", "a"}, {"b", "1"}}));
  }

  TEST_CASE("quotients") {
    auto c3 = chain_frame(3);
    auto d4 = diamond_frame();
    CHECK(isomorphic(quotient(Congruence::identity(d4)).frame, d4));
    CHECK(isomorphic(quotient(nabla(c3, c3->parse("m"))).frame, two_frame()));
    auto q = quotient(nabla(d4, d4->parse("a")));
    CHECK(isomorphic(q.frame, two_frame()));
    CHECK(kernel(q.hom) == nabla(d4, d4->parse("a")));
  }

  TEST_CASE("congruence frames of small frames") {
    CHECK(isomorphic(congruence_frame(two_frame()).structure, two_frame()));
    auto c3 = congruence_frame(chain_frame(3));
    CHECK(c3.size() == 4);
    CHECK(isomorphic(c3.structure, diamond_frame()));
    CHECK(isomorphic(congruence_frame(diamond_frame()).structure, diamond_frame()));
  }

  TEST_CASE("congruence frames agree with brute-force enumeration") {
    for (auto const& nf : frame_catalog(6)) {
      auto cf = congruence_frame(nf.frame);
      auto all = oracle::congruences(*nf.frame);
      CHECK_MESSAGE(cf.size() == all.size(), nf.name);
      for (Element e = 0; e < cf.size(); ++e) {
        auto labels = cf.congruence(e).labels();
        bool found = std::any_of(all.begin(), all.end(), [&](auto const& o) { return oracle::same_partition(o, labels); });
        CHECK_MESSAGE(found, nf.name);
      }
      // The congruence frame of a finite distributive lattice is Boolean on
      // its join-irreducibles.
      CHECK(cf.size() == (std::size_t{1} << nf.frame->join_irreducibles().size()));
    }
  }

  TEST_CASE("relative congruence frames") {
    auto c3 = chain_frame(3);
    auto r = relative_congruence_frame(Sublattice(c3, {c3->bottom(), c3->top()}));
    CHECK(r.size() == 3);
    CHECK(isomorphic(r.structure, chain_frame(3)));

    for (auto const& l : {chain_frame(3), diamond_frame(), chain_frame(4)}) {
      auto full = relative_congruence_frame(Sublattice::full(l));
      CHECK(full.size() == congruence_frame(l).size());
    }
    auto d4 = diamond_frame();
    auto rd = relative_congruence_frame(Sublattice(d4, {d4->bottom(), d4->parse("a"), d4->top()}));
    CHECK(rd.size() == 4);
    CHECK(nabla(d4, d4->parse("b")) == delta(d4, d4->parse("a")));
  }

  TEST_CASE("generator equality for the whole frame") {
    for (auto const& nf : frame_catalog(6)) {
      auto s = Sublattice::full(nf.frame);
      auto cf = relative_congruence_frame(s);
      auto pts = relative_congruence_points_from_s(s);
      CHECK(pts.size() == cf.size());
    }
  }

  TEST_CASE("extension along nabla") {
    auto d4 = diamond_frame();
    auto cf = relative_congruence_frame(Sublattice::full(d4));
    auto ht = extend_hom(identity_hom(d4), cf);
    Element a = d4->parse("a");
    CHECK(ht(cf.nabla(a)) == a);
    CHECK(ht(*cf.delta(a)) == d4->parse("b"));
    CHECK(compose(ht, cf.nabla_hom()) == identity_hom(d4));

    auto c3 = chain_frame(3);
    auto cf3 = relative_congruence_frame(Sublattice(c3, {c3->bottom(), c3->top()}));
    FrameHom h{c3, two_frame(), {0, 1, 1}};
    auto h3 = extend_hom(h, cf3);
    CHECK(hom_validate(h3).is_frame_hom);
    CHECK(compose(h3, cf3.nabla_hom()) == h);

    auto full3 = relative_congruence_frame(Sublattice::full(c3));
    CHECK_THROWS_AS(extend_hom(identity_hom(c3), full3), PreconditionError);
  }

  TEST_CASE("extensions are unique among all homs") {
    auto frames = frame_catalog(4);
    for (auto const& a : frames) {
      auto cf = congruence_frame(a.frame);
      for (auto const& b : frames)
        for (auto const& h : enumerate_homs(a.frame, b.frame)) {
          bool complemented = true;
          for (Element x = 0; x < a.frame->size(); ++x)
            if (!b.frame->complement(h(x))) complemented = false;
          if (!complemented) {
            CHECK_THROWS_AS(extend_hom(h, cf), PreconditionError);
            continue;
          }
          auto ht = extend_hom(h, cf);
          std::size_t matches = 0;
          for (auto const& g : oracle::homs(*cf.structure, *b.frame)) {
            bool ok = true;
            for (Element x = 0; x < a.frame->size(); ++x)
              if (g[cf.nabla(x)] != h(x)) ok = false;
            if (ok) {
              ++matches;
              CHECK(g == ht.map);
            }
          }
          CHECK(matches == 1);
        }
    }
  }

  TEST_CASE("Frith congruences") {
    auto d4 = diamond_frame();
    auto s = Sublattice::full(d4);
    CHECK(is_frith_congruence(s, Congruence::identity(d4)));
    CHECK(is_frith_congruence(s, Congruence::all(d4)));
    auto cf = congruence_frame(d4);
    for (Element e = 0; e < cf.size(); ++e) CHECK(is_frith_congruence(s, cf.congruence(e)));
    auto c3 = chain_frame(3);
    CHECK(is_frith_congruence(Sublattice::full(c3), kernel(FrameHom{c3, two_frame(), {0, 1, 1}})));
  }

  TEST_CASE("property: the eight nabla/delta laws on random frames") {
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
      auto l = random_frame(rng, 5);
      CHECK(nabla(l, l->bottom()).is_identity());
      CHECK(nabla(l, l->top()).is_all());
      for (Element a = 0; a < l->size(); ++a) {
        CHECK(congruence_meet(nabla(l, a), delta(l, a)).is_identity());
        CHECK(congruence_join(nabla(l, a), delta(l, a)).is_all());
        for (Element b = 0; b < l->size(); ++b) {
          CHECK(nabla(l, l->join(a, b)) == congruence_join(nabla(l, a), nabla(l, b)));
          CHECK(nabla(l, l->meet(a, b)) == congruence_meet(nabla(l, a), nabla(l, b)));
          CHECK(delta(l, l->join(a, b)) == congruence_meet(delta(l, a), delta(l, b)));
          CHECK(delta(l, l->meet(a, b)) == congruence_join(delta(l, a), delta(l, b)));
        }
      }
    }
  }

  TEST_CASE("property: kernels and quotients") {
    Rng rng(9);
    for (int i = 0; i < 30; ++i) {
      auto l = random_frame(rng, 4);
      auto cf = congruence_frame(l);
      Element e = static_cast<Element>(rng() % cf.size());
      auto c = cf.congruence(e);
      CHECK(is_congruence(c));
      auto q = quotient(c);
      CHECK(hom_validate(q.hom).is_surjective);
      CHECK(kernel(q.hom) == c);
      CHECK(q.frame->size() == c.block_count());
      CHECK(congruence_from_points(l, collapsed_points(c)) == c);
    }
  }
}
