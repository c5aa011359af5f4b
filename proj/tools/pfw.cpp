#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pfw/pfw.hpp"

namespace {

using pfw::json;

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

std::string slurp(std::string const& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw pfw::InvalidInput("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A single document, a JSON array of documents, or JSON lines.
std::vector<json> read_documents(std::string const& path) {
  std::string text = slurp(path);
  try {
    json j = json::parse(text);
    if (j.is_array()) return {j.begin(), j.end()};
    return {j};
  } catch (json::parse_error const&) {
  }
  std::vector<json> out;
  std::istringstream lines(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(json::parse(line));
    } catch (json::parse_error const& e) {
      throw pfw::InvalidInput(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

pfw::Instance read_instance(std::string const& path) {
  auto docs = read_documents(path);
  if (docs.size() != 1) throw pfw::InvalidInput(path + ": expected exactly one instance");
  return pfw::parse_instance(docs.front(), path);
}

std::string summary(pfw::Instance const& inst) {
  switch (inst.kind) {
    case pfw::InstanceKind::frame: {
      auto l = pfw::as_frame(inst);
      return std::to_string(l->size()) + " elements, " + std::to_string(l->jir().size()) + " join-irreducibles";
    }
    case pfw::InstanceKind::frith: return std::to_string(pfw::as_frith(inst).frame->size()) + " elements";
    case pfw::InstanceKind::pervin: {
      auto x = pfw::as_pervin(inst);
      return std::to_string(x->size()) + " points, " + std::to_string(x->lattice().size()) + " lattice members";
    }
    case pfw::InstanceKind::quni: {
      auto q = pfw::as_quni(inst);
      auto rep = pfw::qu_report(q.q);
      return std::to_string(q.q.basis.size()) + " basis entourages, quasi-uniformity " +
             (rep.is_quasi_uniformity() ? "yes" : "no") + ", uniformity " + (rep.is_uniformity() ? "yes" : "no");
    }
    case pfw::InstanceKind::morphism: return "valid";
  }
  return "";
}

void print(json const& j) { std::cout << j.dump(2) << "\n"; }

json construct(std::string const& op, std::vector<std::string> const& args) {
  auto arity = [&](std::size_t n) {
    if (args.size() != n)
      throw CLI::ValidationError(op + " takes " + std::to_string(n) + " instance file" + (n == 1 ? "" : "s"));
  };
  auto frith_arg = [&](std::size_t i) { return pfw::as_frith(read_instance(args[i])); };
  auto frith_hom_arg = [&](std::size_t i) {
    auto m = pfw::as_morphism(read_instance(args[i]));
    if (auto const* h = std::get_if<pfw::FrithHom>(&m)) return *h;
    if (auto const* h = std::get_if<pfw::FrameHom>(&m))
      return pfw::make_frith_hom(pfw::make_frith(h->dom), pfw::make_frith(h->cod), *h);
    throw pfw::InvalidInput(args[i] + ": expected a frame or Frith morphism");
  };
  auto pervin_arg = [&](std::size_t i) { return pfw::as_pervin(read_instance(args[i])); };
  auto out = [&](auto const& obj) { return pfw::serialize(pfw::make_instance(op, obj)); };

  if (op == "congruence-frame") {
    arity(1);
    auto f = frith_arg(0);
    auto cf = pfw::relative_congruence_frame(f.s);
    json j = out(*cf.structure);
    json blocks = json::array();
    for (pfw::Element e = 0; e < cf.size(); ++e) blocks.push_back(pfw::congruence_to_json(cf.congruence(e)));
    j["congruences"] = blocks;
    return j;
  }
  if (op == "fsym") {
    arity(1);
    return out(pfw::fsym(frith_arg(0)).obj);
  }
  if (op == "boolean-core") {
    arity(1);
    return out(pfw::boolean_core(frith_arg(0)).obj);
  }
  if (op == "product") {
    arity(2);
    return out(pfw::product(frith_arg(0), frith_arg(1)).obj);
  }
  if (op == "coproduct") {
    arity(2);
    return out(pfw::coproduct(frith_arg(0), frith_arg(1)).obj);
  }
  if (op == "equalizer") {
    arity(2);
    return out(pfw::Morphism{pfw::equalizer(frith_hom_arg(0), frith_hom_arg(1)).e});
  }
  if (op == "coequalizer") {
    arity(2);
    return out(pfw::Morphism{pfw::coequalizer(frith_hom_arg(0), frith_hom_arg(1)).q});
  }
  if (op == "ideal-lattice") {
    arity(1);
    return out(*pfw::ideal_lattice(frith_arg(0).s).frame);
  }
  if (op == "psym") {
    arity(1);
    return out(*pfw::psym(pervin_arg(0)));
  }
  if (op == "skula") {
    arity(1);
    auto x = pervin_arg(0);
    return out(*pfw::make_pervin(x->points(), pfw::skula(x).topology));
  }
  if (op == "omega") {
    arity(1);
    return out(pfw::omega_frith(pervin_arg(0)).f);
  }
  if (op == "pt") {
    arity(1);
    return out(*pfw::pt_frith(frith_arg(0)).space);
  }
  if (op == "points") {
    arity(1);
    auto f = frith_arg(0);
    auto sp = pfw::points(f.frame);
    json pts = json::array();
    for (auto const& p : sp.points) {
      json filter = json::array();
      p.filter.for_each([&](std::size_t e) { filter.push_back(f.frame->name(static_cast<pfw::Element>(e))); });
      pts.push_back(json{{"name", p.name}, {"filter", filter}});
    }
    return pts;
  }
  if (op == "td") {
    arity(1);
    auto t = pfw::td_suite(pervin_arg(0));
    return json{{"pervin_td", t.pervin_td},
                {"theta_injective", t.theta_injective},
                {"no_trivial_point", t.no_trivial_point},
                {"skula_discrete", t.skula_discrete},
                {"agree", t.agree()}};
  }
  if (op == "extract-r") {
    arity(1);
    auto q = pfw::as_quni(read_instance(args[0]));
    auto ext = pfw::extract_R(q.q);
    auto const& k = *q.q.frame;
    auto names = [&](std::vector<pfw::Element> const& es) {
      json a = json::array();
      for (auto e : es) a.push_back(k.name(e));
      return a;
    };
    json ws = json::array();
    for (auto const& w : ext.witnesses)
      ws.push_back(json{{"entourage", pfw::cideal_to_json(w.entourage)},
                        {"partition", names(w.partition)},
                        {"r", names(w.r)},
                        {"r_star", names(w.r_star)}});
    return json{{"r", names(ext.r.members())}, {"witnesses", ws}};
  }
  if (op == "completeness") {
    arity(1);
    auto cat = pfw::frith_catalog(pfw::frame_catalog());
    auto r = pfw::completeness_suite(frith_arg(0), cat);
    return json{{"coherent", r.coherent},
                {"fsym_coherent", r.fsym_coherent},
                {"fsym_compact", r.fsym_compact},
                {"cauchy_complete", r.cauchy_complete},
                {"complete_by_definition", r.complete_by_definition},
                {"agree", r.agree},
                {"c_dense_extremal", r.c_dense_extremal},
                {"c_c_star_identity", r.c_c_star_identity},
                {"cauchy_maps", r.cauchy_maps},
                {"cauchy_factor", r.cauchy_factor},
                {"reflection_factor", r.reflection_factor},
                {"unique_completion", r.unique_completion},
                {"ok", r.ok()}};
  }
  throw CLI::ValidationError("unknown construction " + op);
}

std::vector<pfw::Instance> generate(std::string const& kind, std::uint64_t seed, std::size_t count, std::size_t points,
                                    std::size_t max_ji, std::size_t universe) {
  pfw::Rng rng(seed);
  std::vector<pfw::Instance> out;
  auto numbered = [](std::string const& base, std::size_t i) { return base + std::to_string(i); };
  if (kind == "poset") {
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(pfw::make_instance(numbered("poset", i), *pfw::frame_from_poset(pfw::random_labelled_poset(rng, points))));
  } else if (kind == "frame") {
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(pfw::make_instance(numbered("frame", i), *pfw::random_frame(rng, max_ji)));
  } else if (kind == "pervin") {
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(pfw::make_instance(numbered("pervin", i), *pfw::random_pervin(rng, universe)));
  } else if (kind == "quni") {
    for (std::size_t i = 0; i < count; ++i) {
      auto qi = pfw::random_quni_instance(rng, max_ji);
      out.push_back(pfw::make_instance(numbered("quni", i), pfw::QuniDoc{pfw::filter_from_sublattice(qi.k, qi.r), qi.r}));
    }
  } else if (kind == "ji-catalog") {
    for (auto const& f : pfw::ji_catalog(max_ji)) out.push_back(pfw::make_instance(f.name, *f.frame));
  } else if (kind == "frame-catalog") {
    for (auto const& f : pfw::frame_catalog()) out.push_back(pfw::make_instance(f.name, *f.frame));
  } else if (kind == "pervin-catalog") {
    auto spaces = pfw::pervin_spaces(universe);
    for (std::size_t i = 0; i < spaces.size(); ++i)
      out.push_back(pfw::make_instance("P" + std::to_string(universe) + "." + std::to_string(i), *spaces[i]));
  } else {
    throw CLI::ValidationError("unknown kind " + kind +
                               " (poset, frame, pervin, quni, ji-catalog, frame-catalog, pervin-catalog)");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frames, Pervin spaces, Frith frames and their quasi-uniformities"};
  app.require_subcommand(1);
  std::string caps_text;
  app.add_option("--caps", caps_text, "cap overrides, e.g. max_ji=10,max_elements=2048 (after PFW_CAPS)");

  auto* validate = app.add_subcommand("validate", "parse and validate instance files");
  std::vector<std::string> validate_files;
  bool canonical = false;
  validate->add_option("files", validate_files, "JSON, JSON array or JSON lines; - for stdin")->required();
  validate->add_flag("--canonical", canonical, "print the canonical form of every instance");

  auto* cons = app.add_subcommand("construct", "build a derived object");
  std::string op;
  std::vector<std::string> cons_args;
  cons->add_option("op", op,
                   "congruence-frame, fsym, boolean-core, product, coproduct, equalizer, coequalizer, "
                   "ideal-lattice, psym, skula, omega, pt, points, td, extract-r, completeness")
      ->required();
  cons->add_option("args", cons_args, "instance files");

  auto* check = app.add_subcommand("check", "run the property suite and stream JSON lines reports");
  std::string filter, config_file, report_file;
  pfw::SuiteConfig cfg;
  bool list = false, failures_only = false;
  check->add_option("--filter", filter, "run checks whose id contains this string");
  check->add_option("--seed", cfg.seed, "seed for random instances");
  check->add_option("--max-ji", cfg.max_ji, "join-irreducible bound of the exhaustive frame catalog");
  check->add_option("--max-universe", cfg.max_universe, "universe bound of the exhaustive Pervin catalog");
  check->add_option("--max-elements", cfg.max_elements, "element bound of the exhaustive Frith catalog");
  check->add_option("--config", config_file, "JSON object of suite settings, applied before the flags");
  check->add_option("--report", report_file, "write reports here instead of stdout");
  check->add_flag("--list", list, "list check ids and exit");
  check->add_flag("--failures-only", failures_only, "report failing and skipped instances only");

  auto* gen = app.add_subcommand("gen", "generate instances as JSON lines");
  std::string kind;
  std::uint64_t gen_seed = 0;
  std::size_t gen_count = 1, gen_points = 3, gen_max_ji = 3, gen_universe = 3;
  gen->add_option("kind", kind, "poset, frame, pervin, quni, ji-catalog, frame-catalog, pervin-catalog")->required();
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--count", gen_count, "number of random instances");
  gen->add_option("--points", gen_points, "poset size for poset");
  gen->add_option("--max-ji", gen_max_ji, "join-irreducible bound for frame, quni and ji-catalog");
  gen->add_option("--universe", gen_universe, "universe size for pervin and pervin-catalog");

  auto* render = app.add_subcommand("render", "draw a Hasse diagram");
  std::string render_file;
  bool dot = false, congruences = false;
  render->add_flag("--dot", dot, "emit Graphviz DOT")->required();
  render->add_flag("--congruences", congruences, "draw the congruence frame instead");
  render->add_option("file", render_file, "frame or Frith instance")->required();

  pfw::SuiteConfig defaults;
  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    pfw::Caps caps = pfw::caps();
    if (char const* env = std::getenv("PFW_CAPS")) caps = pfw::parse_caps(env, caps);
    if (!caps_text.empty()) caps = pfw::parse_caps(caps_text, caps);
    pfw::set_caps(caps);

    if (*validate) {
      for (auto const& file : validate_files) {
        auto docs = read_documents(file);
        for (std::size_t i = 0; i < docs.size(); ++i) {
          std::string name = docs.size() == 1 ? file : file + "#" + std::to_string(i);
          auto inst = pfw::parse_instance(docs[i], name);
          if (canonical)
            std::cout << pfw::serialize(inst).dump() << "\n";
          else
            std::cout << "ok " << pfw::to_string(inst.kind) << " " << inst.name << ": " << summary(inst) << "\n";
        }
      }
      return kPass;
    }
    if (*cons) {
      print(construct(op, cons_args));
      return kPass;
    }
    if (*check) {
      if (list) {
        for (auto const& c : pfw::check_registry()) std::cout << c.id << "  " << c.summary << "\n";
        return kPass;
      }
      pfw::SuiteConfig run = defaults;
      if (!config_file.empty()) run = pfw::parse_suite_config(json::parse(slurp(config_file)), run);
      for (auto* opt : check->get_options()) {
        if (opt->count() == 0) continue;
        std::string n = opt->get_name();
        if (n == "--seed") run.seed = cfg.seed;
        if (n == "--max-ji") run.max_ji = cfg.max_ji;
        if (n == "--max-universe") run.max_universe = cfg.max_universe;
        if (n == "--max-elements") run.max_elements = cfg.max_elements;
      }
      std::ofstream file;
      if (!report_file.empty()) {
        file.open(report_file);
        if (!file) throw pfw::InvalidInput("cannot write " + report_file);
      }
      std::ostream& os = report_file.empty() ? std::cout : file;
      auto s = pfw::run_suite(filter, run, [&](pfw::CheckReport const& r) {
        if (!failures_only || r.verdict != pfw::Verdict::pass) os << pfw::to_json(r).dump() << "\n";
      });
      os.flush();
      std::cerr << s.pass << " passed, " << s.fail << " failed, " << s.skipped << " skipped\n";
      return s.ok() ? kPass : kCheckFailure;
    }
    if (*gen) {
      for (auto const& inst : generate(kind, gen_seed, gen_count, gen_points, gen_max_ji, gen_universe))
        std::cout << pfw::serialize(inst).dump() << "\n";
      return kPass;
    }
    if (*render) {
      auto inst = read_instance(render_file);
      if (congruences) {
        auto f = pfw::as_frith(inst);
        std::cout << pfw::render_dot(pfw::relative_congruence_frame(f.s), inst.name);
      } else {
        std::cout << pfw::render_dot(inst);
      }
      return kPass;
    }
  } catch (CLI::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (pfw::InvalidInput const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (pfw::PreconditionError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (pfw::CapExceeded const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (json::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kPass;
}
