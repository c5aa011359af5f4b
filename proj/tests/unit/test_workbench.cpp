#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "pfw/pfw.hpp"

using namespace pfw;

namespace {

std::size_t count(std::string const& text, std::string const& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path write_temp(std::string const& name, std::string const& text) {
  auto p = std::filesystem::temp_directory_path() / ("pfw_unit_" + name);
  std::ofstream(p) << text;
  return p;
}

int run_cli(std::string const& args) {
  std::string cmd = std::string(PFW_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_SUITE("workbench") {
  TEST_CASE("frame documents round-trip") {
    auto inst = make_instance("C3", *chain_frame(3));
    auto doc = serialize(inst);
    auto back = parse_instance(doc);
    CHECK(serialize(back) == doc);
    CHECK(isomorphic(as_frame(back), chain_frame(3)));

    json bare = json::parse(R"({"points": ["p", "q"], "le": [["p", "q"], ["p", "p"]]})");
    auto parsed = parse_instance(bare);
    CHECK(parsed.kind == InstanceKind::frame);
    CHECK(as_frame(parsed)->size() == 3);
  }

  TEST_CASE("Pervin documents round-trip") {
    json doc = json::parse(R"({"universe": ["x", "y"], "lattice": [[], ["x"], ["x", "y"]]})");
    auto inst = parse_instance(doc, "sierpinski");
    CHECK(inst.kind == InstanceKind::pervin);
    auto x = as_pervin(inst);
    CHECK(x->lattice().size() == 3);
    CHECK(serialize(parse_instance(serialize(inst))) == serialize(inst));
  }

  TEST_CASE("schema errors carry a JSON path") {
    json doc = json::parse(R"({"kind": "poset", "points": ["p", "q"], "le": [["p", "zz"]]})");
    try {
      parse_instance(doc);
      FAIL("malformed le accepted");
    } catch (SchemaError const& e) {
      CHECK(e.path() == "$.le[0][1]");
    }
    json cyc = json::parse(R"({"kind": "poset", "points": ["p", "q"], "le": [["p", "q"], ["q", "p"]]})");
    CHECK_THROWS_AS(parse_instance(cyc), InvalidInput);
    CHECK_THROWS_AS(parse_instance(json{{"nothing", 1}}), InvalidInput);
  }

  TEST_CASE("other instance kinds round-trip") {
    auto d4 = diamond_frame();
    QuniDoc q{filter_from_sublattice(d4, {d4->parse("a")}), std::vector<Element>{d4->parse("a")}};
    auto qi = make_instance("ea", q);
    auto qb = as_quni(parse_instance(serialize(qi)));
    CHECK(filters_equal(qb.q, q.q));

    auto f = make_frith(chain_frame(3));
    auto fi = make_instance("c3", f);
    CHECK(as_frith(parse_instance(serialize(fi))).frame->size() == 3);

    auto two = make_frith(two_frame());
    Morphism m = make_frith_hom(f, two, FrameHom{f.frame, two.frame, {0, 1, 1}});
    auto mi = make_instance("up", m);
    auto mb = as_morphism(parse_instance(serialize(mi)));
    REQUIRE(std::holds_alternative<FrithHom>(mb));
    CHECK(std::get<FrithHom>(mb).hom.map == std::vector<Element>{0, 1, 1});
  }

  TEST_CASE("DOT rendering") {
    auto c3 = render_dot(*chain_frame(3));
    CHECK(count(c3, "[label=") == 3);
    CHECK(count(c3, "->") == 2);
    auto d4 = render_dot(*diamond_frame());
    CHECK(count(d4, "[label=") == 4);
    CHECK(count(d4, "->") == 4);
    auto two = render_dot(*two_frame());
    CHECK(count(two, "[label=") == 2);
    CHECK(count(two, "->") == 1);
    auto cf = render_dot(congruence_frame(chain_frame(3)));
    CHECK(count(cf, "[label=") == 4);
    CHECK_THROWS_AS(render_dot(make_instance("x", *discrete_pervin(1))), InvalidInput);
  }

  TEST_CASE("generators") {
    Rng a(0), b(0);
    auto p = random_labelled_poset(a, 2);
    auto q = random_labelled_poset(b, 2);
    CHECK(p.strict_pairs() == q.strict_pairs());
    auto posets = posets_up_to_iso(2);
    std::size_t labelled = 0;
    for (auto const& r : posets) labelled += find_poset_isomorphism(p, r) ? 1 : 0;
    CHECK(labelled == 1);

    Rng c(99), d(99);
    for (int i = 0; i < 10; ++i) {
      CHECK(frame_to_json(*random_frame(c, 4)) == frame_to_json(*random_frame(d, 4)));
      CHECK(*random_pervin(c, 3) == *random_pervin(d, 3));
    }
    CHECK(pervin_spaces(2).size() == 4);
  }

  TEST_CASE("suite selection") {
    std::size_t reports = 0;
    auto s = run_suite("nonexistent", {}, [&](CheckReport const&) { ++reports; });
    CHECK(reports == 0);
    CHECK(s.ok());

    auto td = run_suite("td", {}, [](CheckReport const&) {});
    CHECK(td.pass > 0);
    CHECK(td.fail == 0);
    CHECK(td.skipped == 0);

    SuiteConfig small;
    small.random_frames = 5;
    auto nd = run_suite("nabla-delta", small, [](CheckReport const&) {});
    CHECK(nd.fail == 0);
    CHECK(nd.pass == ji_catalog(3).size() + 5);

    CHECK_THROWS_AS(parse_suite_config(json{{"bogus", 1}}), InvalidInput);
    CHECK(parse_suite_config(json{{"seed", 7}}).seed == 7);
  }

  TEST_CASE("caps") {
    Caps saved = caps();
    set_caps(parse_caps("max_elements=8", saved));
    CHECK_THROWS_AS(frame_from_poset(Poset::antichain(4)), CapExceeded);
    set_caps(saved);
    CHECK(frame_from_poset(Poset::antichain(4))->size() == 16);
    CHECK_THROWS_AS(parse_caps("bogus=1"), InvalidInput);
  }

  TEST_CASE("command-line exit codes") {
    auto good = write_temp("c3.json", serialize(make_instance("C3", *chain_frame(3))).dump());
    auto bad = write_temp("bad.json", R"({"kind":"poset","points":["p"],"le":[["p","q"]]})");
    CHECK(run_cli("validate " + good.string()) == 0);
    CHECK(run_cli("validate " + bad.string()) == 2);
    CHECK(run_cli("render --dot " + good.string()) == 0);
    CHECK(run_cli("construct congruence-frame " + good.string()) == 0);
    CHECK(run_cli("check --filter nonexistent") == 0);
    CHECK(run_cli("check --filter td") == 0);
    CHECK(run_cli("gen frame --seed 3 --count 2") == 0);
    CHECK(run_cli("no-such-command") == 2);
    CHECK(run_cli("--caps max_elements=2 validate " + good.string()) == 2);
    CHECK(run_cli("--help") == 0);
  }
}
