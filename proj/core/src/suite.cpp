#include "pfw/suite.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "pfw/catalog.hpp"
#include "pfw/completion.hpp"
#include "pfw/congruence.hpp"
#include "pfw/entourage.hpp"
#include "pfw/error.hpp"
#include "pfw/frith.hpp"
#include "pfw/hom.hpp"
#include "pfw/io.hpp"
#include "pfw/pervin.hpp"
#include "pfw/predicates.hpp"
#include "pfw/spectrum.hpp"

namespace pfw {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

json to_json(CheckReport const& r) {
  json out{{"check", r.check}, {"instance", r.instance}, {"verdict", to_string(r.verdict)}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  if (!r.witness.is_null()) out["witness"] = r.witness;
  return out;
}

namespace {

template <class F>
void for_each_field(SuiteConfig& c, F&& f) {
  f("max_ji", c.max_ji);
  f("max_elements", c.max_elements);
  f("max_universe", c.max_universe);
  f("random_frames", c.random_frames);
  f("random_frame_max_ji", c.random_frame_max_ji);
  f("quni_instances", c.quni_instances);
  f("quni_max_ji", c.quni_max_ji);
  f("random_pervin", c.random_pervin);
  f("random_universe", c.random_universe);
  f("coreflection_instances", c.coreflection_instances);
  f("limit_max_elements", c.limit_max_elements);
}

}  // namespace

SuiteConfig parse_suite_config(json const& j, SuiteConfig base) {
  if (!j.is_object()) throw InvalidInput("suite config: expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number_integer() || it.value().get<std::int64_t>() < 0) throw InvalidInput("suite config: " + it.key() + " must be a non-negative integer");
    bool known = false;
    if (it.key() == "seed") {
      base.seed = it.value().get<std::uint64_t>();
      known = true;
    }
    for_each_field(base, [&](char const* name, std::size_t& v) {
      if (it.key() == name) {
        v = it.value().get<std::size_t>();
        known = true;
      }
    });
    if (!known) throw InvalidInput("suite config: unknown key " + it.key());
  }
  return base;
}

json to_json(SuiteConfig const& c) {
  json out{{"seed", c.seed}};
  SuiteConfig copy = c;
  for_each_field(copy, [&](char const* name, std::size_t& v) { out[name] = v; });
  return out;
}

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome passed(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome failed(std::string detail) { return {false, std::move(detail)}; }

// The witness is attached to failing reports only.
template <class F>
void record(ReportSink const& sink, std::string const& check, std::string const& instance, json const& witness,
            F&& f) {
  CheckReport r{check, instance, Verdict::pass, nullptr, {}};
  try {
    Outcome o = f();
    r.verdict = o.ok ? Verdict::pass : Verdict::fail;
    r.detail = std::move(o.detail);
  } catch (CapExceeded const& e) {
    r.verdict = Verdict::skipped;
    r.detail = e.what();
  } catch (std::exception const& e) {
    r.verdict = Verdict::fail;
    r.detail = std::string("exception: ") + e.what();
  }
  if (r.verdict == Verdict::fail) r.witness = witness;
  sink(r);
}

json pair_witness(json a, json b) { return json{{"dom", std::move(a)}, {"cod", std::move(b)}}; }

std::vector<NamedFrame> random_frames(SuiteConfig const& cfg, std::uint64_t salt) {
  Rng rng(cfg.seed ^ salt);
  std::vector<NamedFrame> out;
  for (std::size_t i = 0; i < cfg.random_frames; ++i)
    out.push_back({"random" + std::to_string(i), random_frame(rng, cfg.random_frame_max_ji)});
  return out;
}

struct NamedPervin {
  std::string name;
  PervinPtr space;
};

std::vector<NamedPervin> named_pervin_catalog(std::size_t max_n) {
  std::vector<NamedPervin> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto spaces = pervin_spaces(n);
    for (std::size_t k = 0; k < spaces.size(); ++k)
      out.push_back({"P" + std::to_string(n) + "." + std::to_string(k), spaces[k]});
  }
  return out;
}

std::vector<Element> complements(FramePtr const& k, std::vector<Element> const& r) {
  std::vector<Element> out;
  for (Element x : r) out.push_back(*k->complement(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> merged(std::vector<Element> a, std::vector<Element> const& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

json quni_witness(FramePtr const& k, std::vector<Element> const& r) {
  json names = json::array();
  for (Element x : r) names.push_back(k->name(x));
  return json{{"frame", frame_to_json(*k)}, {"r", names}};
}

std::string element_list(FiniteFrame const& l, std::vector<Element> const& es) {
  std::string out = "{";
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? "," : "") + l.name(es[i]);
  return out + "}";
}

std::vector<QuniInstance> quni_instances(SuiteConfig const& cfg, std::size_t count, std::uint64_t salt) {
  Rng rng(cfg.seed ^ salt);
  std::vector<QuniInstance> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_quni_instance(rng, cfg.quni_max_ji));
  return out;
}

// (K, R) with K replaced by the subframe generated by R ∪ R*.
QuniInstance generated_part(QuniInstance const& qi) {
  Materialized mat = materialize(subframe_generated(qi.k, merged(qi.r, complements(qi.k, qi.r))));
  std::vector<Element> r;
  for (Element x : qi.r) r.push_back(*mat.restrict[x]);
  return {mat.frame, r};
}

constexpr std::uint64_t kRandomFrameSalt = 0x5eedf00d01ULL;
constexpr std::uint64_t kQuniSalt = 0x5eedf00d02ULL;
constexpr std::uint64_t kPervinSalt = 0x5eedf00d03ULL;
constexpr std::uint64_t kCoreflectionSalt = 0x5eedf00d04ULL;

// --- congruence -----------------------------------------------------------

Outcome nabla_delta_laws(FramePtr const& l) {
  auto const& fr = *l;
  std::vector<Congruence> nab, del;
  for (Element a = 0; a < fr.size(); ++a) {
    nab.push_back(nabla(l, a));
    del.push_back(delta(l, a));
  }
  Congruence id = Congruence::identity(l), all = Congruence::all(l);
  if (!(del[fr.bottom()] == all)) return failed("Δ_0 is not L×L");
  if (!(del[fr.top()] == id)) return failed("Δ_1 is not the identity");
  if (!(nab[fr.bottom()] == id)) return failed("∇_0 is not the identity");
  if (!(nab[fr.top()] == all)) return failed("∇_1 is not L×L");
  auto at = [&](Element a, Element b) { return " at a=" + fr.name(a) + ", b=" + fr.name(b); };
  for (Element a = 0; a < fr.size(); ++a)
    for (Element b = a; b < fr.size(); ++b) {
      Element m = fr.meet(a, b), j = fr.join(a, b);
      if (!(congruence_join(del[a], del[b]) == del[m])) return failed("Δ_a ∨ Δ_b ≠ Δ_{a∧b}" + at(a, b));
      if (!(congruence_meet(del[a], del[b]) == del[j])) return failed("Δ_a ∩ Δ_b ≠ Δ_{a∨b}" + at(a, b));
      if (!(congruence_join(nab[a], nab[b]) == nab[j])) return failed("∇_a ∨ ∇_b ≠ ∇_{a∨b}" + at(a, b));
      if (!(congruence_meet(nab[a], nab[b]) == nab[m])) return failed("∇_a ∧ ∇_b ≠ ∇_{a∧b}" + at(a, b));
    }
  // The whole family of elements, and the empty family.
  Congruence dm = all, nj = id;
  for (Element a = 0; a < fr.size(); ++a) {
    dm = congruence_meet(dm, del[a]);
    nj = congruence_join(nj, nab[a]);
  }
  if (!(dm == del[fr.top()])) return failed("⋂ Δ_a over L ≠ Δ_1");
  if (!(nj == nab[fr.top()])) return failed("⋁ ∇_a over L ≠ ∇_1");
  return passed(std::to_string(fr.size()) + " elements");
}

void check_nabla_delta(SuiteConfig const& cfg, ReportSink const& sink) {
  auto frames = ji_catalog(cfg.max_ji);
  auto extra = random_frames(cfg, kRandomFrameSalt);
  frames.insert(frames.end(), extra.begin(), extra.end());
  for (auto const& f : frames)
    record(sink, "congruence.nabla-delta-laws", f.name, frame_to_json(*f.frame),
           [&] { return nabla_delta_laws(f.frame); });
}

void check_extension(SuiteConfig const& cfg, ReportSink const& sink) {
  auto frames = ji_catalog(cfg.max_ji);
  struct Relative {
    Sublattice s;
    CongruenceFrame cf;
    FrameHom nab;
  };
  std::vector<std::vector<Relative>> rel(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (auto const& s : all_sublattices(frames[i].frame)) {
      CongruenceFrame cf = relative_congruence_frame(s);
      FrameHom nab = cf.nabla_hom();
      rel[i].push_back({s, std::move(cf), std::move(nab)});
    }
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = 0; j < frames.size(); ++j) {
      auto const& l = frames[i].frame;
      auto const& m = frames[j].frame;
      record(sink, "congruence.extension-unique", frames[i].name + "->" + frames[j].name,
             pair_witness(frame_to_json(*l), frame_to_json(*m)), [&]() -> Outcome {
               auto homs = enumerate_homs(l, m);
               std::size_t checked = 0;
               for (auto const& r : rel[i]) {
                 std::vector<FrameHom> alternatives;
                 bool loaded = false;
                 for (auto const& h : homs) {
                   bool admissible = std::all_of(r.s.members().begin(), r.s.members().end(),
                                                 [&](Element s) { return m->complement(h(s)).has_value(); });
                   if (!admissible) continue;
                   if (!loaded) {
                     alternatives = enumerate_homs(r.cf.structure, m);
                     loaded = true;
                   }
                   std::string where = " for S=" + element_list(*l, r.s.members());
                   FrameHom ext = extend_hom(h, r.cf);
                   if (!is_frame_hom(ext)) return failed("extension is not a frame hom" + where);
                   if (compose(ext, r.nab).map != h.map) return failed("extension composed with ∇ differs" + where);
                   std::size_t count = 0;
                   for (auto const& g : alternatives) {
                     if (compose(g, r.nab).map != h.map) continue;
                     ++count;
                     if (g.map != ext.map) return failed("a different extension exists" + where);
                   }
                   if (count != 1) return failed("enumeration found " + std::to_string(count) + " extensions" + where);
                   ++checked;
                 }
               }
               return passed(std::to_string(checked) + " extensions");
             });
    }
}

void check_frame_closure(SuiteConfig const& cfg, ReportSink const& sink) {
  for (auto const& f : ji_catalog(cfg.max_ji))
    record(sink, "congruence.frame-closure", f.name, frame_to_json(*f.frame), [&]() -> Outcome {
      CongruenceFrame cf = congruence_frame(f.frame, 0);
      std::set<Mask> fast(cf.q.begin(), cf.q.end()), slow;
      for (auto const& c : congruence_frame_by_closure(f.frame)) slow.insert(collapsed_points(c));
      if (fast != slow) return failed("join-irreducible encoding differs from the generator closure");
      if (cf.size() != (std::size_t{1} << f.frame->jir().size())) return failed("𝒞L does not have 2^|J| elements");
      if (!is_boolean(Sublattice::full(cf.structure))) return failed("𝒞L is not Boolean");
      return passed(std::to_string(cf.size()) + " congruences");
    });
}

void check_kernel_quotient(SuiteConfig const& cfg, ReportSink const& sink) {
  auto frames = ji_catalog(cfg.max_ji);
  for (auto const& a : frames)
    for (auto const& b : frames)
      record(sink, "congruence.kernel-quotient", a.name + "->" + b.name,
             pair_witness(frame_to_json(*a.frame), frame_to_json(*b.frame)), [&]() -> Outcome {
               std::size_t n = 0;
               for (auto const& h : enumerate_homs(a.frame, b.frame)) {
                 if (!hom_validate(h).is_surjective) continue;
                 Congruence k = kernel(h);
                 Quotient q = quotient(k);
                 if (!isomorphic(q.frame, b.frame)) return failed("quotient by the kernel is not the image");
                 if (!(kernel(q.hom) == k)) return failed("kernel of the quotient map differs");
                 ++n;
               }
               return passed(std::to_string(n) + " surjections");
             });
}

void check_frith_congruences(SuiteConfig const& cfg, ReportSink const& sink) {
  for (auto const& f : ji_catalog(cfg.max_ji))
    record(sink, "congruence.frith-congruences", f.name, frame_to_json(*f.frame), [&]() -> Outcome {
      Sublattice s = Sublattice::full(f.frame);
      CongruenceFrame cf = congruence_frame(f.frame);
      for (Element e = 0; e < cf.size(); ++e)
        if (!is_frith_congruence(s, cf.congruence(e))) return failed("a congruence is not generated by S × S");
      std::vector<Mask> a = cf.q, b = relative_congruence_points_from_s(s);
      CongruenceFrame rel = relative_congruence_frame(s);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::vector<Mask> c = rel.q;
      std::sort(c.begin(), c.end());
      if (a != b || a != c) return failed("generator sets give different congruence frames");
      return passed();
    });
}

// --- entourage ------------------------------------------------------------

void check_witness_sublattices(SuiteConfig const& cfg, ReportSink const& sink) {
  auto inst = quni_instances(cfg, cfg.quni_instances, kQuniSalt);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    auto const& [k, r] = inst[i];
    record(sink, "entourage.witness-sublattices", "quni" + std::to_string(i), quni_witness(k, r), [&]() -> Outcome {
      QuasiUniformity q = filter_from_sublattice(k, r);
      WitnessRelations wr = witness_relations(k, q.basis);
      auto l1 = wr.l1, l2 = wr.l2;
      std::sort(l1.begin(), l1.end());
      std::sort(l2.begin(), l2.end());
      std::vector<Element> rs = complements(k, r);
      if (l1 != subframe_generated(k, r).members())
        return failed("ℒ₁ = " + element_list(*k, l1) + " differs from the subframe generated by R");
      if (l2 != subframe_generated(k, rs).members())
        return failed("ℒ₂ = " + element_list(*k, l2) + " differs from the subframe generated by R*");
      if (subframe_generated(k, merged(r, rs)).is_full()) {
        QuReport rep = qu_report(q);
        if (!rep.is_quasi_uniformity()) return failed("K is generated by R ∪ R* but QU.1-3 fail");
        return passed("generating; QU.1-3 hold");
      }
      return passed();
    });
  }
}

void check_sublattice_recovery(SuiteConfig const& cfg, ReportSink const& sink) {
  auto inst = quni_instances(cfg, cfg.quni_instances, kQuniSalt);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    auto const& [k, r] = inst[i];
    record(sink, "entourage.sublattice-recovery", "quni" + std::to_string(i), quni_witness(k, r), [&]() -> Outcome {
      QuasiUniformity q = filter_from_sublattice(k, r);
      ExtractedR ext = extract_R(q);
      if (ext.r.members() != sublattice_generated(k, r).members())
        return failed("recovered R = " + element_list(*k, ext.r.members()) +
                      " differs from the sublattice generated by R");
      auto const& l = *k;
      for (auto const& w : ext.witnesses) {
        if (w.r.size() != w.partition.size() || w.r_star.size() != w.partition.size())
          return failed("witness sizes disagree");
        if (l.join_of(w.partition) != l.top()) return failed("partition does not join to 1");
        for (std::size_t a = 0; a < w.partition.size(); ++a) {
          if (w.partition[a] == l.bottom()) return failed("partition has a zero block");
          for (std::size_t b = a + 1; b < w.partition.size(); ++b)
            if (l.meet(w.partition[a], w.partition[b]) != l.bottom()) return failed("partition blocks overlap");
        }
        CIdeal meet = cideal_top(k);
        for (std::size_t x = 0; x < w.r.size(); ++x) {
          auto c = l.complement(w.r[x]);
          if (!c || *c != w.r_star[x]) return failed("r_x* is not the complement of r_x");
          meet = cideal_meet(meet, e_r(k, w.r[x]));
        }
        if (!(meet == w.entourage)) return failed("entourage differs from the intersection of the E_{r_x}");
      }
      return passed(std::to_string(ext.witnesses.size()) + " partition witnesses");
    });
  }
}

void check_uniformity_boolean(SuiteConfig const& cfg, ReportSink const& sink) {
  auto inst = quni_instances(cfg, cfg.quni_instances, kQuniSalt);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    QuniInstance g = generated_part(inst[i]);
    record(sink, "entourage.uniformity-iff-boolean", "quni" + std::to_string(i), quni_witness(g.k, g.r),
           [&]() -> Outcome {
             QuasiUniformity q = filter_from_sublattice(g.k, g.r);
             QuReport rep = qu_report(q);
             if (!rep.is_quasi_uniformity()) return failed("QU.1-3 fail on the generated part");
             bool boolean = is_boolean(extract_R(q).r);
             if (rep.is_uniformity() != boolean) return failed(boolean ? "R is Boolean but QU.4 fails" : "QU.4 holds but R is not Boolean");
             if (!frame_predicates(g.k).is_zero_dimensional) return failed("carrier frame is not zero-dimensional");
             return passed(boolean ? "uniformity" : "not symmetric");
           });
  }
}

void check_coreflection(SuiteConfig const& cfg, ReportSink const& sink) {
  auto inst = quni_instances(cfg, cfg.coreflection_instances, kCoreflectionSalt);
  auto tests = ji_catalog(cfg.max_ji);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    QuniInstance g = generated_part(inst[i]);
    record(sink, "entourage.coreflection", "quni" + std::to_string(i), quni_witness(g.k, g.r), [&]() -> Outcome {
      QuasiUniformity q = filter_from_sublattice(g.k, g.r);
      if (!qu_report(q).is_quasi_uniformity()) return failed("QU.1-3 fail");
      Gamma gm = gamma(q);
      if (!gm.dense || !gm.quniform) return failed("γ is not a dense quasi-uniform hom");
      std::size_t homs = 0;
      for (auto const& t : tests) {
        CoreflectionReport rep = coreflection_check(q, gm, Sublattice::full(t.frame));
        if (!rep.bijective) return failed("test object " + t.name + ": " + rep.witness);
        homs += rep.frith_homs;
      }
      return passed(std::to_string(homs) + " homs matched");
    });
  }
}

// --- pervin ---------------------------------------------------------------

void check_pervin_oracle(SuiteConfig const& cfg, ReportSink const& sink) {
  auto cat = named_pervin_catalog(cfg.max_universe);
  std::vector<PervinPtr> spaces;
  for (auto const& x : cat) spaces.push_back(x.space);
  PervinOracle oracle(spaces);
  for (auto const& x : cat)
    for (auto const& y : cat)
      record(sink, "pervin.oracle-agreement", x.name + "->" + y.name,
             pair_witness(pervin_to_json(*x.space), pervin_to_json(*y.space)), [&]() -> Outcome {
               auto maps = enumerate_pervin_maps(x.space, y.space);
               for (auto const& f : maps) {
                 auto p = morphism_predicates(f);
                 std::string at = " for " + morphism_to_json(f)["map"].dump();
                 if (p.is_mono != oracle.is_mono(f)) return failed("mono disagrees" + at);
                 if (p.is_epi != oracle.is_epi(f)) return failed("epi disagrees" + at);
                 if (p.is_extremal_mono != oracle.is_extremal_mono(f)) return failed("extremal mono disagrees" + at);
                 if (p.is_iso != oracle.is_iso(f)) return failed("iso disagrees" + at);
               }
               return passed(std::to_string(maps.size()) + " maps");
             });
}

void check_td(SuiteConfig const& cfg, ReportSink const& sink) {
  auto cat = named_pervin_catalog(cfg.max_universe);
  Rng rng(cfg.seed ^ kPervinSalt);
  for (std::size_t i = 0; i < cfg.random_pervin; ++i)
    cat.push_back({"random" + std::to_string(i), random_pervin(rng, cfg.random_universe)});
  for (auto const& x : cat)
    record(sink, "pervin.td-equivalence", x.name, pervin_to_json(*x.space), [&]() -> Outcome {
      TdReport t = td_suite(x.space);
      if (!t.agree())
        return failed("conditions disagree: (1)=" + std::to_string(t.pervin_td) + " (2)=" +
                      std::to_string(t.theta_injective) + " (3)=" + std::to_string(t.no_trivial_point) +
                      " (4)=" + std::to_string(t.skula_discrete));
      return passed(t.pervin_td ? "T_D" : "not T_D");
    });
}

void check_psym(SuiteConfig const& cfg, ReportSink const& sink) {
  for (auto const& x : named_pervin_catalog(cfg.max_universe))
    record(sink, "pervin.symmetrization", x.name, pervin_to_json(*x.space), [&]() -> Outcome {
      PervinPtr y = psym(x.space);
      if (!is_symmetric(*y)) return failed("psym is not symmetric");
      if (psym(y)->lattice() != y->lattice()) return failed("psym is not idempotent");
      PervinMap back{y, x.space, {}};
      for (std::size_t i = 0; i < x.space->size(); ++i) back.map.push_back(i);
      if (!is_pervin_map(back)) return failed("identity psym(X) -> X is not a Pervin map");
      return passed();
    });
}

void check_extremal_regular(SuiteConfig const& cfg, ReportSink const& sink) {
  for (auto const& x : named_pervin_catalog(cfg.max_universe))
    record(sink, "pervin.extremal-monos-regular", x.name, pervin_to_json(*x.space), [&]() -> Outcome {
      for (Subset y = 0; y <= x.space->all(); ++y)
        if (!equalizer_reproduces(subspace(x.space, y).inclusion))
          return failed("equalizer does not reproduce the subspace " + x.space->set_name(y));
      return passed();
    });
}

// --- frith ----------------------------------------------------------------

struct FrithCatalog {
  std::vector<NamedFrame> frames;
  std::vector<FrithFrame> objects;
};

FrithCatalog frith_catalog_of(std::size_t max_elements) {
  FrithCatalog c{frame_catalog(max_elements), {}};
  c.objects = frith_catalog(c.frames);
  return c;
}

void check_frith_oracle(SuiteConfig const& cfg, ReportSink const& sink) {
  auto cat = frith_catalog_of(cfg.max_elements);
  FrithOracle oracle(cat.objects);
  for (std::size_t i = 0; i < cat.objects.size(); ++i)
    for (std::size_t j = 0; j < cat.objects.size(); ++j) {
      auto const& a = cat.objects[i];
      auto const& b = cat.objects[j];
      record(sink, "frith.oracle-agreement", cat.frames[i].name + "->" + cat.frames[j].name,
             pair_witness(frith_to_json(a), frith_to_json(b)), [&]() -> Outcome {
               auto homs = enumerate_frith_homs(a, b);
               for (auto const& h : homs) {
                 auto p = morphism_predicates(h);
                 std::string at = " for " + morphism_to_json(h.hom)["map"].dump();
                 if (p.is_mono != oracle.is_mono(h)) return failed("mono disagrees" + at);
                 if (p.is_extremal_epi != oracle.is_extremal_epi(h)) return failed("extremal epi disagrees" + at);
                 if (p.is_regular_epi != oracle.is_regular_epi(h)) return failed("regular epi disagrees" + at);
                 if (p.is_iso != oracle.is_iso(h)) return failed("iso disagrees" + at);
               }
               return passed(std::to_string(homs.size()) + " homs");
             });
    }
}

bool same(FrithHom const& a, FrithHom const& b) { return a.hom.map == b.hom.map; }

void check_limits(SuiteConfig const& cfg, ReportSink const& sink) {
  auto cat = frith_catalog_of(cfg.limit_max_elements);
  auto const& obj = cat.objects;
  auto name = [&](std::size_t i) { return cat.frames[i].name; };
  for (std::size_t i = 0; i < obj.size(); ++i)
    for (std::size_t j = 0; j < obj.size(); ++j) {
      auto const& a = obj[i];
      auto const& b = obj[j];
      json w = pair_witness(frith_to_json(a), frith_to_json(b));
      std::string inst = name(i) + "," + name(j);
      record(sink, "frith.limits", "product " + inst, w, [&]() -> Outcome {
        Product p = product(a, b);
        for (auto const& t : obj)
          for (auto const& f1 : enumerate_frith_homs(t, a))
            for (auto const& f2 : enumerate_frith_homs(t, b)) {
              std::size_t n = 0;
              for (auto const& k : enumerate_frith_homs(t, p.obj))
                if (same(compose(p.p1, k), f1) && same(compose(p.p2, k), f2)) ++n;
              if (n != 1) return failed(std::to_string(n) + " mediating maps into the product");
              FrithHom pr = pairing(p, f1, f2);
              if (!same(compose(p.p1, pr), f1) || !same(compose(p.p2, pr), f2)) return failed("pairing is wrong");
            }
        return passed();
      });
      record(sink, "frith.limits", "coproduct " + inst, w, [&]() -> Outcome {
        Coproduct c = coproduct(a, b);
        for (auto const& t : obj)
          for (auto const& g1 : enumerate_frith_homs(a, t))
            for (auto const& g2 : enumerate_frith_homs(b, t)) {
              std::size_t n = 0;
              for (auto const& k : enumerate_frith_homs(c.obj, t))
                if (same(compose(k, c.i1), g1) && same(compose(k, c.i2), g2)) ++n;
              if (n != 1) return failed(std::to_string(n) + " mediating maps out of the coproduct");
              FrithHom cp = copairing(c, g1, g2);
              if (!same(compose(cp, c.i1), g1) || !same(compose(cp, c.i2), g2)) return failed("copairing is wrong");
            }
        return passed();
      });
      record(sink, "frith.limits", "equalizers " + inst, w, [&]() -> Outcome {
        auto homs = enumerate_frith_homs(a, b);
        for (auto const& h1 : homs)
          for (auto const& h2 : homs) {
            Equalizer eq = equalizer(h1, h2);
            if (!same(compose(h1, eq.e), compose(h2, eq.e))) return failed("equalizer does not equalize");
            for (auto const& t : obj)
              for (auto const& g : enumerate_frith_homs(t, a)) {
                if (!same(compose(h1, g), compose(h2, g))) continue;
                std::size_t n = 0;
                for (auto const& k : enumerate_frith_homs(t, eq.obj))
                  if (same(compose(eq.e, k), g)) ++n;
                if (n != 1) return failed(std::to_string(n) + " factorizations through the equalizer");
                if (!same(compose(eq.e, equalizer_factor(eq, g)), g)) return failed("equalizer_factor is wrong");
              }
          }
        return passed();
      });
      record(sink, "frith.limits", "coequalizers " + inst, w, [&]() -> Outcome {
        auto homs = enumerate_frith_homs(a, b);
        for (auto const& h1 : homs)
          for (auto const& h2 : homs) {
            Coequalizer co = coequalizer(h1, h2);
            if (!same(compose(co.q, h1), compose(co.q, h2))) return failed("coequalizer does not coequalize");
            for (auto const& t : obj)
              for (auto const& g : enumerate_frith_homs(b, t)) {
                if (!same(compose(g, h1), compose(g, h2))) continue;
                std::size_t n = 0;
                for (auto const& k : enumerate_frith_homs(co.obj, t))
                  if (same(compose(k, co.q), g)) ++n;
                if (n != 1) return failed(std::to_string(n) + " factorizations through the coequalizer");
                if (!same(compose(coequalizer_factor(co, g), co.q), g)) return failed("coequalizer_factor is wrong");
              }
          }
        return passed();
      });
    }
}

void check_frith_predicates(SuiteConfig const& cfg, ReportSink const& sink) {
  auto cat = frith_catalog_of(cfg.max_elements);
  for (std::size_t i = 0; i < cat.objects.size(); ++i)
    record(sink, "frith.coherence", cat.frames[i].name, frith_to_json(cat.objects[i]), [&]() -> Outcome {
      auto const& f = cat.objects[i];
      FrithPredicates p = frith_predicates(f);
      bool s_is_k = p.compact_elements == f.s.members();
      if (p.is_coherent != s_is_k) return failed("coherent differs from S = K(L)");
      if (p.is_compact && p.is_zero_dimensional && !p.is_coherent)
        return failed("compact and zero-dimensional but not coherent");
      proximity(f);
      idl_functor(f.s);
      return passed();
    });
}

void check_symmetrization(SuiteConfig const& cfg, ReportSink const& sink) {
  auto cat = frith_catalog_of(cfg.max_elements);
  auto const& obj = cat.objects;
  std::vector<std::optional<AlphaData>> alpha(obj.size());
  auto alpha_of = [&](std::size_t i) -> AlphaData const& {
    if (!alpha[i]) alpha[i] = alpha_check(obj[i]);
    return *alpha[i];
  };
  std::vector<std::size_t> symmetric;
  for (std::size_t i = 0; i < obj.size(); ++i)
    if (is_symmetric(obj[i])) symmetric.push_back(i);

  for (std::size_t i = 0; i < obj.size(); ++i) {
    auto const& f = obj[i];
    record(sink, "frith.symmetrization", cat.frames[i].name, frith_to_json(f), [&]() -> Outcome {
      Fsym fs = fsym(f);
      if (!is_symmetric(fs.obj)) return failed("fsym is not symmetric");
      for (std::size_t t : symmetric)
        for (auto const& g : enumerate_frith_homs(f, obj[t])) {
          std::size_t n = 0;
          for (auto const& k : enumerate_frith_homs(fs.obj, obj[t]))
            if (same(compose(k, fs.unit), g)) ++n;
          if (n != 1) return failed(std::to_string(n) + " factorizations through fsym into " + cat.frames[t].name);
          if (!same(compose(fsym_factor(fs, g), fs.unit), g)) return failed("fsym_factor is wrong");
        }
      BooleanCore bc = boolean_core(f);
      if (!is_symmetric(bc.obj)) return failed("boolean core is not symmetric");
      for (std::size_t t : symmetric)
        for (auto const& g : enumerate_frith_homs(obj[t], f)) {
          std::size_t n = 0;
          for (auto const& k : enumerate_frith_homs(obj[t], bc.obj))
            if (same(compose(bc.counit, k), g)) ++n;
          if (n != 1) return failed(std::to_string(n) + " factorizations through the boolean core");
          if (!same(compose(bc.counit, boolean_core_factor(bc, g)), g)) return failed("boolean_core_factor is wrong");
        }
      if (!sym_square(frith_to_quni(f.s)).equal) return failed("uniform reflection of ℰ_S differs from ℰ_{S̄}");
      AlphaData const& d = alpha_of(i);
      if (!d.bijective || !d.is_iso) return failed("α is not a Pervin isomorphism");
      if (!d.preimages) return failed("α does not pull ∇_s and Δ_s back to ŝ and its complement");
      std::size_t squares = 0;
      for (std::size_t t = 0; t < obj.size(); ++t)
        for (auto const& h : enumerate_frith_homs(f, obj[t])) {
          if (!alpha_natural(h, d, alpha_of(t)))
            return failed("naturality square fails for a hom into " + cat.frames[t].name);
          ++squares;
        }
      return passed(std::to_string(squares) + " naturality squares");
    });
  }
}

// --- completion -----------------------------------------------------------

void check_completion(SuiteConfig const& cfg, ReportSink const& sink) {
  auto cat = frith_catalog_of(cfg.max_elements);
  for (std::size_t i = 0; i < cat.objects.size(); ++i)
    record(sink, "completion.characterization", cat.frames[i].name, frith_to_json(cat.objects[i]), [&]() -> Outcome {
      CompletenessReport r = completeness_suite(cat.objects[i], cat.objects);
      if (!r.ok()) return failed(r.witness.empty() ? "completeness conditions fail" : r.witness);
      if (!r.cauchy_complete || !r.coherent) return failed("Cauchy map that is not a frame hom");
      return passed(std::to_string(r.cauchy_maps) + " Cauchy maps");
    });
}

// --- spectrum -------------------------------------------------------------

void check_adjunction(SuiteConfig const& cfg, ReportSink const& sink) {
  auto spaces = named_pervin_catalog(cfg.max_universe);
  auto cat = frith_catalog_of(cfg.max_elements);
  for (auto const& x : spaces)
    for (std::size_t i = 0; i < cat.objects.size(); ++i)
      record(sink, "spectrum.adjunction", x.name + "," + cat.frames[i].name,
             json{{"space", pervin_to_json(*x.space)}, {"frith", frith_to_json(cat.objects[i])}}, [&]() -> Outcome {
               AdjunctionReport r = adjunction_check(x.space, cat.objects[i]);
               if (!r.bijection)
                 return failed("hom-sets do not correspond: " + std::to_string(r.pervin_maps) + " Pervin maps, " +
                               std::to_string(r.frith_homs) + " Frith homs; " + r.witness);
               if (!r.spatial) return failed("frame is not spatial");
               if (r.sober != r.t0) return failed("sober differs from T_0");
               return passed(std::to_string(r.pervin_maps) + " maps");
             });
}

std::vector<Check> build_registry() {
  return {
      {"congruence.nabla-delta-laws", "the eight ∇/Δ identities", check_nabla_delta},
      {"congruence.extension-unique", "unique extension of homs along ∇", check_extension},
      {"congruence.frame-closure", "𝒞L by encoding against generator closure", check_frame_closure},
      {"congruence.kernel-quotient", "kernel and quotient are mutually inverse", check_kernel_quotient},
      {"congruence.frith-congruences", "finite congruences are Frith congruences", check_frith_congruences},
      {"entourage.witness-sublattices", "ℒ₁ and ℒ₂ of ℰ_R", check_witness_sublattices},
      {"entourage.sublattice-recovery", "R recovered from ℰ_R with partition witnesses", check_sublattice_recovery},
      {"entourage.uniformity-iff-boolean", "ℰ_R uniform iff R Boolean", check_uniformity_boolean},
      {"entourage.coreflection", "γ is universal", check_coreflection},
      {"pervin.oracle-agreement", "Pervin morphism predicates against the oracle", check_pervin_oracle},
      {"pervin.td-equivalence", "four T_D conditions coincide", check_td},
      {"pervin.symmetrization", "psym is a symmetric idempotent reflection", check_psym},
      {"pervin.extremal-monos-regular", "subspace inclusions are equalizers", check_extremal_regular},
      {"frith.oracle-agreement", "Frith morphism predicates against the oracle", check_frith_oracle},
      {"frith.limits", "universal properties of (co)products and (co)equalizers", check_limits},
      {"frith.coherence", "coherence against compact elements", check_frith_predicates},
      {"frith.symmetrization", "fsym, boolean core, symmetrization square and α", check_symmetrization},
      {"completion.characterization", "completeness conditions and Cauchy factorization", check_completion},
      {"spectrum.adjunction", "Perv(X, pt f) against Frith(f, Ω X)", check_adjunction},
  };
}

}  // namespace

std::vector<Check> const& check_registry() {
  static std::vector<Check> const registry = build_registry();
  return registry;
}

std::vector<Check const*> select_checks(std::string const& filter) {
  std::vector<Check const*> out;
  for (auto const& c : check_registry())
    if (c.id.find(filter) != std::string::npos) out.push_back(&c);
  return out;
}

SuiteSummary run_suite(std::string const& filter, SuiteConfig const& cfg, ReportSink const& sink) {
  SuiteSummary s;
  ReportSink counting = [&](CheckReport const& r) {
    switch (r.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::skipped: ++s.skipped; break;
    }
    sink(r);
  };
  for (Check const* c : select_checks(filter)) c->run(cfg, counting);
  return s;
}

}  // namespace pfw
