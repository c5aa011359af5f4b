#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pfw/pfw.hpp"

using namespace pfw;

namespace {

std::vector<Element> elems(FramePtr const& l, std::vector<std::string> const& names) {
  std::vector<Element> out;
  for (auto const& n : names) out.push_back(l->parse(n));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_axis(FiniteFrame const& l, Element x, Element y) { return x == l.bottom() || y == l.bottom(); }

}  // namespace

TEST_SUITE("entourage") {
  TEST_CASE("oplus") {
    auto d4 = diamond_frame();
    auto const& l = *d4;
    for (auto [x, y] : cideal_bottom(d4).pairs()) CHECK(is_axis(l, x, y));
    CHECK(oplus(d4, 0, 0) == cideal_bottom(d4));
    CHECK(oplus(d4, l.top(), l.top()) == cideal_top(d4));
    CHECK(cideal_top(d4).pairs().size() == 16);
    Element a = l.parse("a"), b = l.parse("b");
    auto ab = oplus(d4, a, b);
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y)
        CHECK(ab.contains(x, y) == ((l.leq(x, a) && l.leq(y, b)) || is_axis(l, x, y)));
  }

  TEST_CASE("C-ideals agree with brute-force enumeration") {
    for (auto const& l : {two_frame(), chain_frame(3), diamond_frame()})
      for (auto const& m : {two_frame(), chain_frame(3), diamond_frame()}) {
        auto all = oracle::cideals(*l, *m);
        for (auto const& v : all) {
          Bits b(v.size());
          for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) b.set(i);
          CHECK(is_cideal(*l, *m, b));
        }
        auto co = coproduct(make_frith(l), make_frith(m));
        CHECK(co.obj.frame->size() == all.size());
      }
  }

  TEST_CASE("composition") {
    auto d4 = diamond_frame();
    Element a = d4->parse("a");
    CHECK(compose(e_r(d4, a), cideal_bottom(d4)) == cideal_bottom(d4));
    CHECK(compose(cideal_bottom(d4), e_r(d4, a)) == cideal_bottom(d4));
    CHECK(compose(oplus(d4, a, a), oplus(d4, a, a)) == oplus(d4, a, a));
    for (auto const& l : {diamond_frame(), boolean_frame(3), chain_frame(4)}) {
      auto b = complemented_elements(l);
      for (Element r : b.members()) CHECK(compose(e_r(l, r), e_r(l, r)) == e_r(l, r));
    }
  }

  TEST_CASE("entourage predicates") {
    auto d4 = diamond_frame();
    auto top = entourage_predicates(cideal_top(d4));
    CHECK(top.is_entourage);
    CHECK(top.is_transitive);
    CHECK(top.is_finite);
    CHECK(top.is_symmetric);

    Element a = d4->parse("a"), b = d4->parse("b");
    auto ea = entourage_predicates(e_r(d4, a));
    CHECK(ea.is_entourage);
    CHECK(ea.is_transitive);
    CHECK(ea.is_finite);
    CHECK_FALSE(ea.is_symmetric);
    CHECK(ea.inverse == e_r(d4, b));

    CHECK_FALSE(entourage_predicates(oplus(d4, a, a)).is_entourage);
  }

  TEST_CASE("E_r") {
    auto d4 = diamond_frame();
    CHECK(e_r(d4, d4->bottom()) == cideal_top(d4));
    CHECK(e_r(d4, d4->top()) == cideal_top(d4));
    Element a = d4->parse("a"), b = d4->parse("b");
    auto ea = e_r(d4, a);
    for (Element x = 0; x < d4->size(); ++x)
      for (Element y = 0; y < d4->size(); ++y) CHECK(ea.contains(x, y) == (d4->leq(x, a) || d4->leq(y, b)));
    auto c3 = chain_frame(3);
    CHECK_FALSE(entourage_predicates(e_r(c3, c3->parse("m"))).is_entourage);
  }

  TEST_CASE("witness relations") {
    auto d4 = diamond_frame();
    auto top = witness_relations(d4, {cideal_top(d4)});
    CHECK(top.l1 == elems(d4, {"0", "1"}));
    CHECK(top.l2 == elems(d4, {"0", "1"}));

    auto w = witness_relations(d4, {e_r(d4, d4->parse("a"))});
    CHECK(w.l1 == elems(d4, {"0", "a", "1"}));
    CHECK(w.l2 == elems(d4, {"0", "b", "1"}));

    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
      auto qi = random_quni_instance(rng, 4);
      auto q = filter_from_sublattice(qi.k, qi.r);
      auto wr = witness_relations(qi.k, q.basis);
      CHECK(wr.l1.front() == qi.k->bottom());
      CHECK(wr.l2.front() == qi.k->bottom());
    }
  }

  TEST_CASE("filters from sublattices") {
    auto d4 = diamond_frame();
    Element a = d4->parse("a"), b = d4->parse("b");
    auto qa = qu_report(filter_from_sublattice(d4, {a}));
    CHECK(qa.is_quasi_uniformity());
    CHECK_FALSE(qa.is_uniformity());
    CHECK(qu_report(filter_from_sublattice(d4, {a, b})).is_uniformity());
    auto t = filter_from_sublattice(two_frame(), {two_frame()->top()});
    CHECK(t.basis.size() == 1);
    CHECK(t.basis[0] == cideal_top(t.frame));
    CHECK_THROWS_AS(filter_from_sublattice(chain_frame(3), {1}), PreconditionError);

    // (K, {top}) satisfies QU.3 only when K is generated by {0, 1}.
    CHECK(qu_report(QuasiUniformity{two_frame(), {cideal_top(two_frame())}}).is_quasi_uniformity());
    CHECK_FALSE(qu_report(QuasiUniformity{d4, {cideal_top(d4)}}).is_quasi_uniformity());
  }

  TEST_CASE("image filters") {
    auto d4 = diamond_frame();
    Element a = d4->parse("a");
    auto q = filter_from_sublattice(d4, {a});
    auto id = image_filter(identity_hom(d4), q, q);
    CHECK(id.into_target);
    CHECK(id.target_generated);

    auto two = two_frame();
    FrameHom h{d4, two, {0, 1, 0, 1}};
    REQUIRE(h(a) == two->top());
    CHECK(image(h, e_r(d4, a)) == cideal_top(two));

    for (auto const& dom : frame_catalog(5))
      for (auto const& cod : frame_catalog(5))
        for (auto const& g : enumerate_homs(dom.frame, cod.frame)) {
          auto b = complemented_elements(dom.frame);
          for (Element r : b.members()) CHECK(image(g, e_r(dom.frame, r)) == e_r(cod.frame, g(r)));
        }
  }

  TEST_CASE("recovering R") {
    auto d4 = diamond_frame();
    auto ex = extract_R(filter_from_sublattice(d4, {d4->parse("a")}));
    CHECK(ex.r.members() == elems(d4, {"0", "a", "1"}));
    CHECK(extract_R(QuasiUniformity{d4, {cideal_top(d4)}}).r.members() == elems(d4, {"0", "1"}));
    auto b3 = boolean_frame(3);
    auto e3 = extract_R(filter_from_sublattice(b3, b3->join_irreducibles()));
    CHECK(e3.r == sublattice_generated(b3, b3->join_irreducibles()));
    for (auto const& pw : e3.witnesses) {
      CIdeal meet = cideal_top(b3);
      for (Element r : pw.r) meet = cideal_meet(meet, e_r(b3, r));
      CHECK(meet == pw.entourage);
      CHECK(b3->join_of(pw.partition) == b3->top());
    }
  }

  TEST_CASE("Frith frames as quasi-uniform frames") {
    auto t = frith_to_quni(Sublattice::full(two_frame()));
    CHECK(isomorphic(t.cf.structure, two_frame()));
    CHECK(t.q.min() == cideal_top(t.cf.structure));

    auto c3 = chain_frame(3);
    auto fq = frith_to_quni(Sublattice::full(c3));
    CHECK(isomorphic(fq.cf.structure, diamond_frame()));
    Element nm = fq.cf.nabla(c3->parse("m"));
    CHECK(filters_equal(fq.q, filter_from_sublattice(fq.cf.structure, {nm})));
    auto w = witness_relations(fq.cf.structure, fq.q.basis);
    CHECK(isomorphic(materialize(Sublattice(fq.cf.structure, w.l1)).frame, c3));
  }

  TEST_CASE("gamma") {
    auto d4 = diamond_frame();
    Element a = d4->parse("a"), b = d4->parse("b");
    CHECK(gamma(filter_from_sublattice(d4, {a})).is_iso);
    CHECK(gamma(QuasiUniformity{two_frame(), {cideal_top(two_frame())}}).is_iso);
    CHECK(gamma(filter_from_sublattice(d4, {a, b})).is_iso);
  }

  TEST_CASE("uniform reflection") {
    auto d4 = diamond_frame();
    Element a = d4->parse("a"), b = d4->parse("b");
    auto u = filter_from_sublattice(d4, {a, b});
    CHECK(filters_equal(uniform_reflection(u), u));
    CHECK(filters_equal(uniform_reflection(filter_from_sublattice(d4, {a})), u));
    CHECK(sym_square(frith_to_quni(Sublattice::full(chain_frame(3)))).equal);
  }

  TEST_CASE("property: C-ideal algebra") {
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
      auto l = random_frame(rng, 3);
      auto pick = [&] {
        std::vector<std::pair<Element, Element>> seed;
        for (int k = 0; k < 2; ++k)
          seed.emplace_back(static_cast<Element>(rng() % l->size()), static_cast<Element>(rng() % l->size()));
        return cideal_generated(l, seed);
      };
      auto x = pick(), y = pick(), z = pick();
      CHECK(is_cideal(*l, *l, x.bits()));
      CHECK(inverse(inverse(x)) == x);
      CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
      CHECK(inverse(compose(x, y)) == compose(inverse(y), inverse(x)));
      CHECK(cideal_meet(x, y).leq(x));
      CHECK(x.leq(cideal_join(x, y)));
    }
  }

  TEST_CASE("property: generated C-ideals are least") {
    auto d4 = diamond_frame();
    auto all = oracle::cideals(*d4, *d4);
    Rng rng(37);
    for (int i = 0; i < 30; ++i) {
      std::vector<std::pair<Element, Element>> seed{{static_cast<Element>(rng() % 4), static_cast<Element>(rng() % 4)},
                                                    {static_cast<Element>(rng() % 4), static_cast<Element>(rng() % 4)}};
      auto g = cideal_generated(d4, seed);
      std::size_t least = 0;
      for (auto const& v : all) {
        bool has_seed = std::all_of(seed.begin(), seed.end(), [&](auto p) { return v[p.first * 4 + p.second]; });
        if (!has_seed) continue;
        bool contains_g = true;
        for (auto [x, y] : g.pairs())
          if (!v[x * 4 + y]) contains_g = false;
        CHECK(contains_g);
        std::size_t n = static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
        if (n == g.pairs().size()) ++least;
      }
      CHECK(least == 1);
    }
  }

  TEST_CASE("property: the filter of R recovers R") {
    Rng rng(41);
    for (int i = 0; i < 30; ++i) {
      auto qi = random_quni_instance(rng, 4);
      auto q = filter_from_sublattice(qi.k, qi.r);
      auto w = witness_relations(qi.k, q.basis);
      CHECK(w.l1 == subframe_generated(qi.k, qi.r).members());
      auto ex = extract_R(q);
      CHECK(ex.r == sublattice_generated(qi.k, qi.r));
    }
  }
}
