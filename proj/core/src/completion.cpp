#include "pfw/completion.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "pfw/error.hpp"
#include "pfw/predicates.hpp"

namespace pfw {

IdealLattice ideal_lattice(Sublattice const& s) {
  auto const& l = *s.parent();
  std::vector<Bits> ideals = enumerate_ideals(s);
  std::vector<std::string> names;
  std::vector<Element> generator;
  for (auto const& j : ideals) {
    Element top = l.bottom();
    j.for_each([&](std::size_t e) { top = l.join(top, static_cast<Element>(e)); });
    if (!j.test(top)) throw Error("ideal_lattice: non-principal ideal in a finite lattice");
    for (Element m : s.members())
      if (j.test(m) != l.leq(m, top)) throw Error("ideal_lattice: ideal is not the down-set of its top");
    generator.push_back(top);
    names.push_back(l.name(top));
  }
  // Ideals of a distributive lattice are determined by their
  // join-irreducible members, and on those ∪ is the join of ideals.
  std::vector<Element> jis;
  for (Element m : s.members()) {
    if (m == l.bottom()) continue;
    Element below = l.bottom();
    for (Element k : s.members())
      if (k != m && l.leq(k, m)) below = l.join(below, k);
    if (below != m) jis.push_back(m);
  }
  std::vector<Bits> encoded;
  for (auto const& j : ideals) {
    Bits b(l.size());
    for (Element m : jis)
      if (j.test(m)) b.set(m);
    encoded.push_back(b);
  }
  FamilyFrame ff = frame_from_set_family(encoded, names);
  IdealLattice il{s, ff.frame, std::vector<Bits>(ff.frame->size()), std::vector<Element>(s.size())};
  std::unordered_map<Element, Element> by_top;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    il.ideal[ff.member[i]] = ideals[i];
    by_top.emplace(generator[i], ff.member[i]);
  }
  for (std::size_t i = 0; i < s.size(); ++i) il.principal[i] = by_top.at(s.members()[i]);
  return il;
}

FrameHom ideal_extension(IdealLattice const& il, FramePtr const& m, std::vector<Element> const& h) {
  auto const& base = il.base;
  auto const& l = *base.parent();
  auto const& mm = *m;
  auto const& mem = base.members();
  if (h.size() != mem.size()) throw PreconditionError("ideal_extension: map size mismatch");
  std::unordered_map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < mem.size(); ++i) pos.emplace(mem[i], i);
  if (h[pos.at(l.bottom())] != mm.bottom() || h[pos.at(l.top())] != mm.top())
    throw PreconditionError("ideal_extension: map is not bounded");
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j < mem.size(); ++j) {
      if (h[pos.at(l.meet(mem[i], mem[j]))] != mm.meet(h[i], h[j]) ||
          h[pos.at(l.join(mem[i], mem[j]))] != mm.join(h[i], h[j]))
        throw PreconditionError("ideal_extension: map is not a lattice hom at " + l.name(mem[i]) + ", " +
                                l.name(mem[j]));
    }
  std::vector<Element> map(il.frame->size());
  for (Element e = 0; e < map.size(); ++e) {
    Element acc = mm.bottom();
    il.ideal[e].for_each([&](std::size_t x) { acc = mm.join(acc, h[pos.at(static_cast<Element>(x))]); });
    map[e] = acc;
  }
  FrameHom out{il.frame, m, map};
  HomReport r = hom_validate(out);
  if (!r.is_frame_hom) throw Error("ideal_extension: extension is not a frame hom (" + r.witness + ")");
  return out;
}

CMap c_and_c_star(FrithFrame const& f) {
  auto const& l = *f.frame;
  CMap out;
  out.f = f;
  out.il = ideal_lattice(f.s);
  std::vector<Element> sp = out.il.principal;
  std::sort(sp.begin(), sp.end());
  out.idl = make_frith(Sublattice(out.il.frame, sp));
  std::vector<Element> cmap(out.il.frame->size());
  std::unordered_map<Bits, Element, BitsHash> by_ideal;
  for (Element e = 0; e < cmap.size(); ++e) {
    Element acc = l.bottom();
    out.il.ideal[e].for_each([&](std::size_t x) { acc = l.join(acc, static_cast<Element>(x)); });
    cmap[e] = acc;
    by_ideal.emplace(out.il.ideal[e], e);
  }
  out.c = make_frith_hom(out.idl, f, {out.il.frame, f.frame, cmap});
  out.c_star.resize(l.size());
  for (Element a = 0; a < l.size(); ++a) {
    Bits down(l.size());
    for (Element s : f.s.members())
      if (l.leq(s, a)) down.set(s);
    auto it = by_ideal.find(down);
    if (it == by_ideal.end()) throw Error("c_star: ↓a ∩ S is not an ideal for a = " + l.name(a));
    out.c_star[a] = it->second;
  }
  auto const& il = *out.il.frame;
  for (Element j = 0; j < il.size(); ++j)
    for (Element a = 0; a < l.size(); ++a)
      if (l.leq(out.c(j), a) != il.leq(j, out.c_star[a]))
        throw Error("c_and_c_star: Galois law fails at " + il.name(j) + ", " + l.name(a));
  for (Element a = 0; a < l.size(); ++a)
    if (out.c(out.c_star[a]) != a) throw Error("c_and_c_star: c ∘ c* differs from the identity at " + l.name(a));
  auto r = morphism_predicates(out.c);
  if (!r.is_dense || !r.is_extremal_epi) throw Error("c_and_c_star: c is not a dense extremal epi");
  return out;
}

LambdaMap lambda_map(FrithFrame const& f) {
  LambdaMap out;
  out.cm = c_and_c_star(f);
  out.cf = relative_congruence_frame(out.cm.idl.s);
  out.map.resize(f.frame->size());
  for (Element a = 0; a < f.frame->size(); ++a) out.map[a] = out.cf.nabla(out.cm.c_star[a]);
  if (!is_cauchy({f, out.cf.structure, out.map}).is_cauchy()) throw Error("lambda_map: λ is not a Cauchy map");
  return out;
}

QuniCauchyReport quni_cauchy(QuasiUniformity const& q, FramePtr const& m, std::vector<Element> const& map) {
  auto const& l = *q.frame;
  auto const& mm = *m;
  QuniCauchyReport r;
  r.bounded_meet = map[l.bottom()] == mm.bottom() && map[l.top()] == mm.top();
  for (Element a = 0; a < l.size() && r.bounded_meet; ++a)
    for (Element b = 0; b < l.size(); ++b)
      if (map[l.meet(a, b)] != mm.meet(map[a], map[b])) {
        r.bounded_meet = false;
        break;
      }
  std::vector<CIdeal> family = q.basis;
  family.push_back(q.min());
  WitnessRelations w = witness_relations(q.frame, family);
  std::vector<Element> cover(l.size(), mm.bottom());
  for (auto const* rel : {&w.lhd1, &w.lhd2})
    for (auto [b, a] : *rel) cover[a] = mm.join(cover[a], map[b]);
  r.covered = true;
  for (Element a = 0; a < l.size(); ++a)
    if (!mm.leq(map[a], cover[a])) r.covered = false;
  r.uniform_cover = true;
  for (auto const& e : family) {
    Element acc = mm.bottom();
    for (Element a = 0; a < l.size(); ++a)
      if (e.contains(a, a)) acc = mm.join(acc, map[a]);
    if (acc != mm.top()) r.uniform_cover = false;
  }
  return r;
}

CauchyReport is_cauchy(CauchyCandidate const& phi) {
  auto const& l = *phi.dom.frame;
  auto const& m = *phi.cod;
  auto const& s = phi.dom.s;
  auto const& f = phi.map;
  if (f.size() != l.size()) throw PreconditionError("is_cauchy: map is not total");
  CauchyReport r;
  r.c1 = f[l.bottom()] == m.bottom() && f[l.top()] == m.top();
  for (Element x : s.members())
    for (Element y : s.members())
      if (f[l.meet(x, y)] != m.meet(f[x], f[y]) || f[l.join(x, y)] != m.join(f[x], f[y])) r.c1 = false;
  r.c2 = true;
  for (Element a = 0; a < l.size(); ++a) {
    Element acc = m.bottom();
    for (Element x : s.members())
      if (l.leq(x, a)) acc = m.join(acc, f[x]);
    if (acc != f[a]) r.c2 = false;
  }
  r.c3 = true;
  for (Element x : s.members())
    if (m.join(f[x], m.pseudocomplement(f[x])) != m.top()) r.c3 = false;
  r.is_frame_hom = is_frame_hom({phi.dom.frame, phi.cod, f});
  if (is_symmetric(phi.dom)) {
    QuasiUniformity q = filter_from_sublattice(phi.dom.frame, s.members());
    r.quni = quni_cauchy(q, phi.cod, f);
    if (r.quni->is_cauchy() != r.is_cauchy())
      throw Error("is_cauchy: the two Cauchy notions disagree on a symmetric Frith frame");
  }
  return r;
}

std::vector<CauchyCandidate> enumerate_cauchy(FrithFrame const& f, FramePtr const& m) {
  auto const& l = *f.frame;
  auto const& mm = *m;
  std::size_t cap = caps().max_enum_size;
  if (l.size() > cap) throw CapExceeded("max_enum_size", cap, l.size());
  if (mm.size() > cap) throw CapExceeded("max_enum_size", cap, mm.size());
  auto const& mem = f.s.members();
  std::vector<std::size_t> pos(l.size(), mem.size());
  for (std::size_t i = 0; i < mem.size(); ++i) pos[mem[i]] = i;
  std::vector<Element> complemented;
  for (Element y = 0; y < mm.size(); ++y)
    if (mm.complement(y)) complemented.push_back(y);

  std::vector<CauchyCandidate> out;
  std::vector<Element> phi(mem.size());
  auto consistent = [&](std::size_t k) {
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = i; j <= k; ++j) {
        std::size_t mi = pos[l.meet(mem[i], mem[j])];
        std::size_t ji = pos[l.join(mem[i], mem[j])];
        bool fresh = j == k;
        if (mi <= k && (fresh || mi == k) && phi[mi] != mm.meet(phi[i], phi[j])) return false;
        if (ji <= k && (fresh || ji == k) && phi[ji] != mm.join(phi[i], phi[j])) return false;
      }
    if (mem[k] == l.bottom() && phi[k] != mm.bottom()) return false;
    if (mem[k] == l.top() && phi[k] != mm.top()) return false;
    return true;
  };
  // Each meet or join law is checked once all three of its members are
  // assigned.
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == mem.size()) {
      CauchyCandidate c{f, m, std::vector<Element>(l.size())};
      for (Element a = 0; a < l.size(); ++a) {
        Element acc = mm.bottom();
        for (std::size_t i = 0; i < mem.size(); ++i)
          if (l.leq(mem[i], a)) acc = mm.join(acc, phi[i]);
        c.map[a] = acc;
      }
      if (!is_cauchy(c).is_cauchy()) throw Error("enumerate_cauchy: search produced a non-Cauchy map");
      out.push_back(std::move(c));
      return;
    }
    for (Element y : complemented) {
      phi[k] = y;
      if (consistent(k)) self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

FrameHom factor_cauchy(LambdaMap const& lam, CauchyCandidate const& phi) {
  if (!is_cauchy(phi).is_cauchy()) throw PreconditionError("factor_cauchy: map is not Cauchy");
  auto const& il = lam.cm.il;
  std::vector<Element> h;
  for (Element s : il.base.members()) h.push_back(phi.map[s]);
  FrameHom ext = ideal_extension(il, phi.cod, h);
  FrameHom g = extend_hom(ext, lam.cf);
  for (Element a = 0; a < phi.dom.frame->size(); ++a)
    if (g(lam.map[a]) != phi.map[a]) throw Error("factor_cauchy: g ∘ λ differs from φ at " + phi.dom.frame->name(a));
  return g;
}

CompletenessReport completeness_suite(FrithFrame const& f, std::vector<FrithFrame> const& catalog) {
  CompletenessReport r;
  r.coherent = frith_predicates(f).is_coherent;
  Fsym fs = fsym(f);
  FrithPredicates fp = frith_predicates(fs.obj);
  r.fsym_coherent = fp.is_coherent;
  r.fsym_compact = fp.is_compact;

  LambdaMap lam = lambda_map(f);
  r.c_dense_extremal = true;
  r.c_c_star_identity = true;

  r.cauchy_complete = true;
  r.cauchy_factor = true;
  for (auto const& m : catalog) {
    for (auto const& phi : enumerate_cauchy(f, m.frame)) {
      ++r.cauchy_maps;
      if (!is_cauchy(phi).is_frame_hom) {
        r.cauchy_complete = false;
        r.witness = "Cauchy map into " + std::to_string(m.frame->size()) + "-element frame is not a frame hom";
      }
      try {
        factor_cauchy(lam, phi);
      } catch (Error const& e) {
        r.cauchy_factor = false;
        r.witness = e.what();
      }
    }
  }

  Fsym fi = fsym(lam.cm.idl);
  FrameHom cbar = extend_to_congruences(lam.cm.c.hom, fi.cf, fs.cf);
  r.complete_by_definition = true;
  r.reflection_factor = true;
  for (auto const& m : catalog) {
    if (!is_symmetric(m)) continue;
    for (auto const& h : enumerate_frith_homs(m, fs.obj)) {
      auto hp = morphism_predicates(h);
      if (!hp.is_dense || !hp.is_extremal_epi) continue;
      if (!hp.is_iso) {
        r.complete_by_definition = false;
        r.witness = "dense extremal epi onto the symmetric reflection is not an iso";
      }
      std::size_t found = 0;
      bool good = true;
      for (auto const& g : enumerate_frith_homs(fi.obj, m)) {
        if (compose(h.hom, g.hom).map != cbar.map) continue;
        ++found;
        auto gp = morphism_predicates(g);
        good = good && gp.is_dense && gp.is_extremal_epi;
      }
      if (found != 1 || !good) {
        r.reflection_factor = false;
        r.witness = "factorization through the reflection of c: " + std::to_string(found) + " candidates";
      }
    }
  }

  r.unique_completion = true;
  r.literal_unique_completion = true;
  for (auto const& m : catalog) {
    std::optional<Fsym> fm;
    for (auto const& c2 : enumerate_frith_homs(m, f)) {
      auto cp = morphism_predicates(c2);
      if (!cp.is_dense || !cp.is_extremal_epi) continue;
      std::size_t found = 0;
      bool iso = true;
      for (auto const& hat : enumerate_frith_homs(m, lam.cm.idl)) {
        if (compose(lam.cm.c.hom, hat.hom).map != c2.hom.map) continue;
        ++found;
        iso = iso && morphism_predicates(hat).is_iso;
      }
      bool unique_iso = found == 1 && iso;
      if (!unique_iso) r.literal_unique_completion = false;
      if (!fm) fm = fsym(m);
      bool sym_dense = hom_validate(extend_to_congruences(c2.hom, fm->cf, fs.cf)).is_dense;
      if (sym_dense && !unique_iso) {
        r.unique_completion = false;
        r.witness = "second completion not matched by a unique iso";
      }
    }
  }

  r.agree = r.coherent == r.fsym_coherent && r.fsym_coherent == r.fsym_compact &&
            r.fsym_compact == r.cauchy_complete && r.cauchy_complete == r.complete_by_definition;
  return r;
}

}  // namespace pfw
