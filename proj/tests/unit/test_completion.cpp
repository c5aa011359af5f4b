#include <doctest.h>

#include "oracles.hpp"
#include "pfw/pfw.hpp"

using namespace pfw;

TEST_SUITE("completion") {
  TEST_CASE("ideal lattices") {
    CHECK(isomorphic(ideal_lattice(Sublattice::full(two_frame())).frame, two_frame()));
    auto c3 = chain_frame(3);
    auto il = ideal_lattice(Sublattice::full(c3));
    CHECK(isomorphic(il.frame, c3));
    CHECK(il.principal.size() == 3);

    auto small = ideal_lattice(Sublattice(c3, {c3->bottom(), c3->top()}));
    auto ext = ideal_extension(small, c3, {c3->bottom(), c3->top()});
    CHECK(ext(small.principal[1]) == c3->top());
    CHECK(ext(small.principal[0]) == c3->bottom());

    for (auto const& nf : frame_catalog(6)) {
      auto s = Sublattice::full(nf.frame);
      CHECK(ideal_lattice(s).frame->size() == enumerate_ideals(s).size());
      CHECK(enumerate_ideals(s).size() == nf.frame->size());
    }
  }

  TEST_CASE("c and its adjoint") {
    auto t = c_and_c_star(make_frith(two_frame()));
    CHECK(morphism_predicates(t.c).is_iso);
    auto c3 = chain_frame(3);
    auto cm = c_and_c_star(make_frith(c3));
    Element m = c3->parse("m");
    Bits want(c3->size());
    want.set(c3->bottom());
    want.set(m);
    CHECK(cm.il.ideal[cm.c_star[m]] == want);
    for (Element j = 0; j < cm.il.frame->size(); ++j)
      for (Element a = 0; a < c3->size(); ++a)
        CHECK(c3->leq(cm.c(j), a) == cm.il.frame->leq(j, cm.c_star[a]));
  }

  TEST_CASE("lambda") {
    auto c3 = chain_frame(3);
    auto lam = lambda_map(make_frith(c3));
    CHECK(lam.map[c3->bottom()] == lam.cf.structure->bottom());
    CHECK(lam.map[c3->top()] == lam.cf.structure->top());
    Element lm = lam.map[c3->parse("m")];
    CHECK(lam.cf.structure->complement(lm).has_value());
    CHECK(lm == lam.cf.nabla(lam.cm.c_star[c3->parse("m")]));
  }

  TEST_CASE("Cauchy maps") {
    auto c3 = make_frith(chain_frame(3));
    auto two = two_frame();
    CHECK_FALSE(is_cauchy(CauchyCandidate{c3, two, {1, 1, 1}}).c1);
    CHECK(enumerate_cauchy(make_frith(two_frame()), two).size() == 1);
    CHECK(enumerate_cauchy(c3, two).size() == 2);
    for (auto const& phi : enumerate_cauchy(c3, two)) CHECK(is_cauchy(phi).is_frame_hom);
    // Only 0 and 1 are complemented in C3, so m must go to one of them.
    auto endo = enumerate_cauchy(c3, chain_frame(3));
    CHECK(endo.size() == 2);
    for (auto const& phi : endo) CHECK(is_cauchy(phi).is_frame_hom);
    CHECK(enumerate_cauchy(make_frith(diamond_frame()), two).size() == 2);
  }

  TEST_CASE("factoring Cauchy maps") {
    auto c3 = make_frith(chain_frame(3));
    auto lam = lambda_map(c3);
    auto g = factor_cauchy(lam, CauchyCandidate{c3, lam.cf.structure, lam.map});
    CHECK(g == identity_hom(lam.cf.structure));
    for (auto const& nf : frame_catalog(5)) {
      auto f = make_frith(nf.frame);
      auto l = lambda_map(f);
      for (auto const& m : frame_catalog(4))
        for (auto const& phi : enumerate_cauchy(f, m.frame)) {
          auto gg = factor_cauchy(l, phi);
          for (Element s : f.s.members()) CHECK(gg(l.map[s]) == phi.map[s]);
        }
    }
  }

  TEST_CASE("completeness") {
    std::vector<FrithFrame> cat;
    for (auto const& nf : frame_catalog(4)) cat.push_back(make_frith(nf.frame));
    auto c3 = completeness_suite(make_frith(chain_frame(3)), cat);
    CHECK(c3.ok());
    CHECK(c3.cauchy_complete);
    CHECK(c3.complete_by_definition);
    // (C3,C3) -> (2,2), m -> 1 is a dense extremal epi from a complete
    // Frith frame that is not an iso.
    auto two = completeness_suite(make_frith(two_frame()), cat);
    CHECK(two.ok());
    CHECK_FALSE(two.literal_unique_completion);
    auto d4 = completeness_suite(make_frith(diamond_frame()), cat);
    CHECK(d4.ok());
  }
}
