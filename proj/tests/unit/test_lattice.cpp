#include <doctest.h>

#include <algorithm>
#include <string>

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

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("down-set frames of small posets") {
    auto two = frame_from_poset(Poset::antichain(1));
    CHECK(two->size() == 2);
    CHECK(isomorphic(two, two_frame()));

    auto c3 = frame_from_poset(Poset::chain(2));
    CHECK(c3->size() == 3);
    CHECK(isomorphic(c3, chain_frame(3)));

    auto d4 = frame_from_poset(Poset::antichain(2));
    CHECK(d4->size() == 4);
    CHECK(isomorphic(d4, diamond_frame()));
    CHECK(d4->join_irreducibles().size() == 2);
  }

  TEST_CASE("frames from tables") {
    auto t = frame_from_table({"0", "1"}, {{0, 0}, {0, 1}}, {{0, 1}, {1, 1}});
    CHECK(isomorphic(t.frame, two_frame()));

    auto d = frame_from_table({"0", "a", "b", "1"}, {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}},
                              {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}});
    CHECK(d.frame->size() == 4);
    CHECK(d.frame->join_irreducibles().size() == 2);

    std::vector<std::vector<std::size_t>> meet = {
        {0, 0, 0, 0, 0}, {0, 1, 1, 0, 1}, {0, 1, 2, 0, 2}, {0, 0, 0, 3, 3}, {0, 1, 2, 3, 4}};
    std::vector<std::vector<std::size_t>> join = {
        {0, 1, 2, 3, 4}, {1, 1, 2, 4, 4}, {2, 2, 2, 4, 4}, {3, 4, 4, 3, 4}, {4, 4, 4, 4, 4}};
    try {
      frame_from_table({"0", "a", "b", "c", "1"}, meet, join);
      FAIL("pentagon accepted");
    } catch (InvalidInput const& e) {
      std::string what = e.what();
      CHECK(what.find("distribut") != std::string::npos);
    }
  }

  TEST_CASE("pseudocomplements and complements") {
    auto c3 = chain_frame(3);
    auto d4 = diamond_frame();
    for (auto const& l : {two_frame(), c3, d4, boolean_frame(3)}) {
      CHECK(l->pseudocomplement(l->bottom()) == l->top());
      CHECK(l->pseudocomplement(l->top()) == l->bottom());
      CHECK(l->complement(l->bottom()) == l->top());
    }
    CHECK(c3->pseudocomplement(c3->parse("m")) == c3->bottom());
    CHECK(d4->pseudocomplement(d4->parse("a")) == d4->parse("b"));
    CHECK(d4->complement(d4->parse("a")) == d4->parse("b"));
    CHECK_FALSE(c3->complement(c3->parse("m")).has_value());
    CHECK(complemented_elements(d4).size() == 4);
    CHECK(complemented_elements(c3).members() == std::vector<Element>{c3->bottom(), c3->top()});
  }

  TEST_CASE("generated sublattices and subframes") {
    auto d4 = diamond_frame();
    CHECK(sublattice_generated(d4, {}).members() == elems(d4, {"0", "1"}));
    CHECK(sublattice_generated(d4, {d4->parse("a")}).members() == elems(d4, {"0", "a", "1"}));
    CHECK(sublattice_generated(d4, elems(d4, {"a", "b"})).is_full());
    CHECK(subframe_generated(d4, {d4->parse("a")}).members() == elems(d4, {"0", "a", "1"}));
    CHECK(subframe_generated(d4, Sublattice::full(d4).members()).is_full());
    auto b3 = boolean_frame(3);
    CHECK(subframe_generated(b3, b3->join_irreducibles()).is_full());
  }

  TEST_CASE("compactness, coherence, zero-dimensionality") {
    for (auto const& l : {two_frame(), chain_frame(3), diamond_frame(), chain_frame(5), boolean_frame(3)}) {
      auto p = frame_predicates(l);
      CHECK(p.is_compact);
      CHECK(p.compact_elements.size() == l->size());
    }
    auto d4 = diamond_frame();
    Sublattice s(d4, elems(d4, {"0", "a", "1"}));
    CHECK_FALSE(is_join_dense(s));
    auto c3p = frame_predicates(chain_frame(3));
    CHECK(c3p.is_coherent);
    CHECK_FALSE(c3p.is_zero_dimensional);
    CHECK(frame_predicates(d4).is_zero_dimensional);
  }

  TEST_CASE("hom validation") {
    auto d4 = diamond_frame();
    auto id = hom_validate(identity_hom(d4));
    CHECK(id.is_frame_hom);
    CHECK(id.is_injective);
    CHECK(id.is_surjective);
    CHECK(id.is_dense);

    auto c3 = chain_frame(3);
    auto two = two_frame();
    auto up = hom_validate(FrameHom{c3, two, {0, 1, 1}});
    CHECK(up.is_frame_hom);
    CHECK(up.is_dense);
    CHECK(up.is_surjective);
    CHECK_FALSE(up.is_injective);
    auto down = hom_validate(FrameHom{c3, two, {0, 0, 1}});
    CHECK(down.is_frame_hom);
    CHECK_FALSE(down.is_dense);

    auto bad = hom_validate(FrameHom{d4, two, {0, 1, 1, 1}});
    CHECK_FALSE(bad.is_frame_hom);
    CHECK_FALSE(bad.witness.empty());
  }

  TEST_CASE("hom enumeration matches brute force") {
    auto frames = frame_catalog(5);
    for (auto const& a : frames)
      for (auto const& b : frames) {
        auto got = enumerate_homs(a.frame, b.frame);
        auto want = oracle::homs(*a.frame, *b.frame);
        CHECK_MESSAGE(got.size() == want.size(), a.name << " -> " << b.name);
      }
  }

  TEST_CASE("property: random frames are distributive lattices") {
    Rng rng(17);
    for (int i = 0; i < 40; ++i) {
      auto l = random_frame(rng, 4);
      for (Element a = 0; a < l->size(); ++a) {
        CHECK(l->leq(l->pseudocomplement(a), l->pseudocomplement(a)));
        CHECK(l->meet(a, l->pseudocomplement(a)) == l->bottom());
        for (Element x = 0; x < l->size(); ++x)
          if (l->meet(a, x) == l->bottom()) CHECK(l->leq(x, l->pseudocomplement(a)));
        for (Element b = 0; b < l->size(); ++b) {
          CHECK(l->meet(a, b) == oracle::glb(*l, a, b));
          CHECK(l->join(a, b) == oracle::lub(*l, a, b));
          for (Element c = 0; c < l->size(); ++c)
            CHECK(l->meet(a, l->join(b, c)) == l->join(l->meet(a, b), l->meet(a, c)));
        }
      }
      CHECK(complemented_elements(l).members() == oracle::complemented(*l));
    }
  }

  TEST_CASE("property: generated sublattices are least closed supersets") {
    Rng rng(23);
    for (int i = 0; i < 30; ++i) {
      auto l = random_frame(rng, 4);
      std::vector<Element> r;
      for (Element e = 0; e < l->size(); ++e)
        if (rng() % 4 == 0) r.push_back(e);
      auto s = sublattice_generated(l, r);
      CHECK(is_sublattice(*l, s.members()));
      for (Element e : r) CHECK(s.contains(e));
      for (auto const& t : all_sublattices(l)) {
        if (!std::all_of(r.begin(), r.end(), [&](Element e) { return t.contains(e); })) continue;
        for (Element e : s.members()) CHECK(t.contains(e));
      }
    }
  }

  TEST_CASE("catalog of frames") {
    auto cat = frame_catalog(6);
    CHECK(cat.size() == 13);
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = i + 1; j < cat.size(); ++j) CHECK_FALSE(isomorphic(cat[i].frame, cat[j].frame));
    CHECK(posets_up_to_iso(2).size() == 2);
    CHECK(posets_up_to_iso(3).size() == 5);
    CHECK(posets_up_to_iso(4).size() == 16);
  }
}
