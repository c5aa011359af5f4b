#include "pfw/frith.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "pfw/completion.hpp"
#include "pfw/error.hpp"
#include "pfw/predicates.hpp"

namespace pfw {

namespace {

std::vector<Element> image_of(FrameHom const& h, std::vector<Element> const& xs) {
  std::set<Element> out;
  for (Element x : xs) out.insert(h(x));
  return {out.begin(), out.end()};
}

FrameHom checked_hom(FramePtr const& dom, FramePtr const& cod, std::vector<Element> map, char const* what) {
  FrameHom h{dom, cod, std::move(map)};
  HomReport r = hom_validate(h);
  if (!r.is_frame_hom) throw Error(std::string(what) + ": not a frame hom (" + r.witness + ")");
  return h;
}

}  // namespace

FrithFrame make_frith(Sublattice const& s) {
  if (!is_join_dense(s)) throw InvalidInput("frith: sublattice is not join-dense");
  if (!s.is_full()) throw Error("frith: join-dense sublattice of a finite frame is not the whole frame");
  return {s.parent(), s};
}

FrithFrame make_frith(FramePtr const& l) { return make_frith(Sublattice::full(l)); }

FrithHom make_frith_hom(FrithFrame const& dom, FrithFrame const& cod, FrameHom const& h) {
  if (h.dom != dom.frame || h.cod != cod.frame) throw InvalidInput("frith hom: frames do not match");
  HomReport r = hom_validate(h);
  if (!r.is_frame_hom) throw InvalidInput("frith hom: " + r.witness);
  for (Element s : dom.s.members())
    if (!cod.s.contains(h(s)))
      throw InvalidInput("frith hom: image of " + dom.frame->name(s) + " is outside the lattice part");
  return {dom, cod, h};
}

FrithHom frith_identity(FrithFrame const& f) { return {f, f, identity_hom(f.frame)}; }

FrithHom compose(FrithHom const& g, FrithHom const& f) { return {f.dom, g.cod, compose(g.hom, f.hom)}; }

std::vector<FrithHom> enumerate_frith_homs(FrithFrame const& dom, FrithFrame const& cod) {
  std::vector<FrithHom> out;
  for (auto& h : enumerate_homs_preserving(dom.s, cod.s)) out.push_back({dom, cod, std::move(h)});
  return out;
}

FrithMorphismReport morphism_predicates(FrithHom const& h) {
  FrithMorphismReport r;
  HomReport hr = hom_validate(h.hom);
  r.is_mono = hr.is_injective;
  r.is_dense = hr.is_dense;
  r.is_extremal_epi = image_of(h.hom, h.dom.s.members()) == h.cod.s.members();
  r.is_iso = r.is_mono && r.is_extremal_epi;
  r.is_regular_epi = r.is_extremal_epi && is_frith_congruence(h.dom.s, kernel(h.hom));
  return r;
}

FrithOracle::FrithOracle(std::vector<FrithFrame> catalog) : catalog_(std::move(catalog)) {}

std::vector<FrithHom> const& FrithOracle::homs(FrithFrame const& a, FrithFrame const& b) {
  auto key = std::make_pair(a.frame.get(), b.frame.get());
  auto it = homs_.find(key);
  if (it == homs_.end()) it = homs_.emplace(key, enumerate_frith_homs(a, b)).first;
  return it->second;
}

bool FrithOracle::is_mono(FrithHom const& h) {
  for (auto const& z : catalog_) {
    std::set<std::vector<Element>> seen;
    for (auto const& g : homs(z, h.dom))
      if (!seen.insert(compose(h.hom, g.hom).map).second) return false;
  }
  return true;
}

bool FrithOracle::is_epi(FrithHom const& h) {
  for (auto const& z : catalog_) {
    std::set<std::vector<Element>> seen;
    for (auto const& g : homs(h.cod, z))
      if (!seen.insert(compose(g.hom, h.hom).map).second) return false;
  }
  return true;
}

bool FrithOracle::is_iso(FrithHom const& h) {
  auto id_dom = identity_hom(h.dom.frame).map;
  auto id_cod = identity_hom(h.cod.frame).map;
  for (auto const& g : homs(h.cod, h.dom))
    if (compose(g.hom, h.hom).map == id_dom && compose(h.hom, g.hom).map == id_cod) return true;
  return false;
}

bool FrithOracle::is_extremal_epi(FrithHom const& h) {
  if (!is_epi(h)) return false;
  for (auto const& z : catalog_) {
    auto const& firsts = homs(h.dom, z);
    for (auto const& m : homs(z, h.cod)) {
      bool factors = std::any_of(firsts.begin(), firsts.end(),
                                 [&](FrithHom const& g) { return compose(m.hom, g.hom).map == h.hom.map; });
      if (factors && is_mono(m) && !is_iso(m)) return false;
    }
  }
  return true;
}

bool FrithOracle::is_regular_epi(FrithHom const& h) {
  if (!is_epi(h)) return false;
  // Maps out of dom that do not factor through h; a coequalized pair must
  // separate each of them.
  std::vector<FrithHom> bad;
  for (auto const& w : catalog_) {
    auto const& seconds = homs(h.cod, w);
    for (auto const& g : homs(h.dom, w)) {
      bool factors = std::any_of(seconds.begin(), seconds.end(),
                                 [&](FrithHom const& u) { return compose(u.hom, h.hom).map == g.hom.map; });
      if (!factors) bad.push_back(g);
    }
  }
  for (auto const& z : catalog_) {
    auto const& ks = homs(z, h.dom);
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = i; j < ks.size(); ++j) {
        if (compose(h.hom, ks[i].hom).map != compose(h.hom, ks[j].hom).map) continue;
        bool separates = std::all_of(bad.begin(), bad.end(), [&](FrithHom const& g) {
          return compose(g.hom, ks[i].hom).map != compose(g.hom, ks[j].hom).map;
        });
        if (separates) return true;
      }
  }
  return false;
}

Product product(FrithFrame const& a, FrithFrame const& b) {
  auto const& la = *a.frame;
  auto const& lb = *b.frame;
  std::size_t na = la.jir().size();
  std::vector<Mask> family;
  std::vector<std::string> names;
  for (Element x = 0; x < la.size(); ++x)
    for (Element y = 0; y < lb.size(); ++y) {
      family.push_back(la.mask(x) | (lb.mask(y) << na));
      names.push_back("(" + la.name(x) + "," + lb.name(y) + ")");
    }
  FamilyFrame ff = frame_from_mask_family(family, na + lb.jir().size(), names);
  std::vector<Element> m1(ff.frame->size()), m2(ff.frame->size());
  for (Element x = 0; x < la.size(); ++x)
    for (Element y = 0; y < lb.size(); ++y) {
      Element e = ff.member[x * lb.size() + y];
      m1[e] = x;
      m2[e] = y;
    }
  FrithFrame obj = make_frith(ff.frame);
  return {obj, make_frith_hom(obj, a, {ff.frame, a.frame, m1}), make_frith_hom(obj, b, {ff.frame, b.frame, m2})};
}

FrithHom pairing(Product const& p, FrithHom const& f1, FrithHom const& f2) {
  if (f1.dom.frame != f2.dom.frame) throw PreconditionError("pairing: domains differ");
  std::size_t nb = p.p2.cod.frame->size();
  std::vector<Element> by_pair(p.p1.cod.frame->size() * nb);
  for (Element e = 0; e < p.obj.frame->size(); ++e) by_pair[p.p1(e) * nb + p.p2(e)] = e;
  std::vector<Element> map(f1.dom.frame->size());
  for (Element x = 0; x < map.size(); ++x) map[x] = by_pair[f1(x) * nb + f2(x)];
  return make_frith_hom(f1.dom, p.obj, {f1.dom.frame, p.obj.frame, map});
}

Equalizer equalizer(FrithHom const& h1, FrithHom const& h2) {
  if (h1.dom.frame != h2.dom.frame || h1.cod.frame != h2.cod.frame)
    throw PreconditionError("equalizer: maps are not parallel");
  std::vector<Element> agree;
  for (Element s : h1.dom.s.members())
    if (h1(s) == h2(s)) agree.push_back(s);
  Sublattice k = subframe_generated(h1.dom.frame, agree);
  Materialized mat = materialize(k);
  std::vector<Element> s_in_k;
  for (Element s : agree) s_in_k.push_back(*mat.restrict[s]);
  std::sort(s_in_k.begin(), s_in_k.end());
  FrithFrame obj = make_frith(Sublattice(mat.frame, s_in_k));
  return {obj, make_frith_hom(obj, h1.dom, {mat.frame, h1.dom.frame, mat.embed})};
}

FrithHom equalizer_factor(Equalizer const& eq, FrithHom const& g) {
  auto const& em = eq.e.hom.map;
  std::vector<Element> map(g.dom.frame->size());
  for (Element x = 0; x < map.size(); ++x) {
    auto it = std::find(em.begin(), em.end(), g(x));
    if (it == em.end()) throw PreconditionError("equalizer_factor: map does not equalize the pair");
    map[x] = static_cast<Element>(it - em.begin());
  }
  return make_frith_hom(g.dom, eq.obj, {g.dom.frame, eq.obj.frame, map});
}

namespace {

std::string cideal_name(CIdeal const& c, std::size_t count_all) {
  auto const& l = *c.left();
  auto const& r = *c.right();
  if (c.bits().count() == count_all) return "1";
  std::vector<std::pair<Element, Element>> gens;
  for (auto [x, y] : c.pairs()) {
    if (x == 0 || y == 0) continue;
    bool maximal = true;
    for (auto [u, v] : c.pairs())
      if ((u != x || v != y) && l.leq(x, u) && r.leq(y, v)) maximal = false;
    if (maximal) gens.emplace_back(x, y);
  }
  if (gens.empty()) return "0";
  std::string out;
  for (auto [x, y] : gens) {
    if (!out.empty()) out += "|";
    out += l.name(x) + "(+)" + r.name(y);
  }
  return out;
}

}  // namespace

Coproduct coproduct(FrithFrame const& a, FrithFrame const& b) {
  FramePtr la = a.frame;
  FramePtr lb = b.frame;
  std::vector<CIdeal> gens;
  for (Element x : la->join_irreducibles())
    for (Element y : lb->join_irreducibles()) gens.push_back(oplus(la, lb, x, y));
  std::vector<CIdeal> all{cideal_saturate(la, lb, Bits(la->size() * lb->size()))};
  std::unordered_set<CIdeal, CIdealHash> seen(all.begin(), all.end());
  std::size_t cap = caps().max_cideals;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (auto const& g : gens) {
      CIdeal j = cideal_join(all[i], g);
      if (seen.insert(j).second) {
        all.push_back(j);
        if (all.size() > cap) throw CapExceeded("max_cideals", cap, all.size());
      }
    }
  // A C-ideal is determined by the pairs of join-irreducibles it contains,
  // and on those the join of C-ideals is union.
  std::vector<Bits> family;
  std::vector<std::string> names;
  std::size_t count_all = la->size() * lb->size();
  for (auto const& c : all) {
    Bits b(count_all);
    for (Element x : la->join_irreducibles())
      for (Element y : lb->join_irreducibles())
        if (c.contains(x, y)) b.set(x * lb->size() + y);
    family.push_back(b);
    names.push_back(cideal_name(c, count_all));
  }
  FamilyFrame ff = frame_from_set_family(family, names);
  Coproduct out;
  out.ideal.resize(ff.frame->size());
  std::unordered_map<Bits, Element, BitsHash> index;
  for (std::size_t i = 0; i < all.size(); ++i) {
    out.ideal[ff.member[i]] = all[i];
    index.emplace(all[i].bits(), ff.member[i]);
  }
  std::vector<Element> m1(la->size()), m2(lb->size());
  for (Element x = 0; x < la->size(); ++x) m1[x] = index.at(oplus(la, lb, x, lb->top()).bits());
  for (Element y = 0; y < lb->size(); ++y) m2[y] = index.at(oplus(la, lb, la->top(), y).bits());
  FrameHom i1 = checked_hom(la, ff.frame, m1, "coproduct injection");
  FrameHom i2 = checked_hom(lb, ff.frame, m2, "coproduct injection");
  std::vector<Element> gen;
  for (Element s : a.s.members()) gen.push_back(i1(s));
  for (Element s : b.s.members()) gen.push_back(i2(s));
  Sublattice s = sublattice_generated(ff.frame, gen);
  if (!is_join_dense(s)) throw Error("coproduct: generated lattice part is not join-dense");
  out.obj = make_frith(s);
  out.i1 = make_frith_hom(a, out.obj, i1);
  out.i2 = make_frith_hom(b, out.obj, i2);
  return out;
}

FrithHom copairing(Coproduct const& c, FrithHom const& g1, FrithHom const& g2) {
  if (g1.cod.frame != g2.cod.frame) throw PreconditionError("copairing: codomains differ");
  auto const& m = *g1.cod.frame;
  std::vector<Element> map(c.obj.frame->size());
  for (Element e = 0; e < map.size(); ++e) {
    Element acc = m.bottom();
    for (auto [x, y] : c.ideal[e].pairs()) acc = m.join(acc, m.meet(g1(x), g2(y)));
    map[e] = acc;
  }
  return make_frith_hom(c.obj, g1.cod, {c.obj.frame, g1.cod.frame, map});
}

Coequalizer coequalizer(FrithHom const& h1, FrithHom const& h2) {
  if (h1.dom.frame != h2.dom.frame || h1.cod.frame != h2.cod.frame)
    throw PreconditionError("coequalizer: maps are not parallel");
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < h1.dom.frame->size(); ++a)
    if (h1(a) != h2(a)) pairs.emplace_back(h1(a), h2(a));
  Congruence theta = congruence_generated(h1.cod.frame, pairs);
  Quotient q = quotient(theta);
  Sublattice r(q.frame, image_of(q.hom, h1.cod.s.members()));
  FrithFrame obj = make_frith(r);
  return {obj, make_frith_hom(h1.cod, obj, q.hom), theta};
}

FrithHom coequalizer_factor(Coequalizer const& c, FrithHom const& g) {
  std::vector<std::optional<Element>> map(c.obj.frame->size());
  for (Element x = 0; x < g.dom.frame->size(); ++x) {
    auto& slot = map[c.q(x)];
    if (slot && *slot != g(x)) throw PreconditionError("coequalizer_factor: map does not coequalize the pair");
    slot = g(x);
  }
  std::vector<Element> out;
  for (auto const& v : map) out.push_back(*v);
  return make_frith_hom(c.obj, g.cod, {c.obj.frame, g.cod.frame, out});
}

Fsym fsym(FrithFrame const& f) {
  Fsym out;
  out.cf = relative_congruence_frame(f.s);
  std::vector<Element> gens;
  for (Element s : f.s.members()) {
    gens.push_back(out.cf.nabla(s));
    auto d = out.cf.delta(s);
    if (!d) throw Error("fsym: missing delta of " + f.frame->name(s));
    gens.push_back(*d);
  }
  Sublattice sbar = sublattice_generated(out.cf.structure, gens);
  if (!is_boolean(sbar)) throw Error("fsym: generated lattice part is not Boolean");
  if (!is_join_dense(sbar)) throw Error("fsym: generated lattice part is not join-dense");
  out.obj = make_frith(sbar);
  out.unit = make_frith_hom(f, out.obj, out.cf.nabla_hom());
  return out;
}

FrithHom fsym_factor(Fsym const& fs, FrithHom const& g) {
  if (!is_symmetric(g.cod)) throw PreconditionError("fsym_factor: codomain is not symmetric");
  return make_frith_hom(fs.obj, g.cod, extend_hom(g.hom, fs.cf));
}

BooleanCore boolean_core(FrithFrame const& f) {
  std::vector<Element> c = complemented_within(f.s);
  Sublattice n = subframe_generated(f.frame, c);
  Materialized mat = materialize(n);
  std::vector<Element> c_in_n;
  for (Element x : c) c_in_n.push_back(*mat.restrict[x]);
  std::sort(c_in_n.begin(), c_in_n.end());
  FrithFrame obj = make_frith(Sublattice(mat.frame, c_in_n));
  if (!is_symmetric(obj)) throw Error("boolean_core: result is not symmetric");
  return {obj, make_frith_hom(obj, f, {mat.frame, f.frame, mat.embed})};
}

FrithHom boolean_core_factor(BooleanCore const& bc, FrithHom const& g) {
  if (!is_symmetric(g.dom)) throw PreconditionError("boolean_core_factor: domain is not symmetric");
  auto const& em = bc.counit.hom.map;
  std::vector<Element> map(g.dom.frame->size());
  for (Element x = 0; x < map.size(); ++x) {
    auto it = std::find(em.begin(), em.end(), g(x));
    if (it == em.end()) throw Error("boolean_core_factor: image leaves the Boolean core");
    map[x] = static_cast<Element>(it - em.begin());
  }
  return make_frith_hom(g.dom, bc.obj, {g.dom.frame, bc.obj.frame, map});
}

IdlFrith idl_functor(Sublattice const& s) {
  IdealLattice il = ideal_lattice(s);
  std::vector<Element> members = il.principal;
  std::sort(members.begin(), members.end());
  IdlFrith out{make_frith(Sublattice(il.frame, members)), il.principal};
  FramePredicates fp = frame_predicates(il.frame);
  if (fp.compact_elements != members) throw Error("idl_functor: lattice part differs from the compact elements");
  return out;
}

bool is_symmetric(FrithFrame const& f) { return is_boolean(f.s); }

FrithPredicates frith_predicates(FrithFrame const& f) {
  FrithPredicates r;
  FramePredicates fp = frame_predicates(f.frame, &f.s);
  r.is_compact = fp.is_compact;
  r.compact_elements = fp.compact_elements;
  auto const& k = fp.compact_elements;
  auto const& s = f.s.members();
  r.is_coherent = std::all_of(s.begin(), s.end(), [&](Element x) { return std::binary_search(k.begin(), k.end(), x); });
  if (r.is_coherent && k != s) throw Error("frith_predicates: coherent but S differs from K(L)");
  r.is_zero_dimensional =
      std::all_of(s.begin(), s.end(), [&](Element x) { return f.frame->complement(x).has_value(); });
  r.is_symmetric = is_symmetric(f);
  return r;
}

std::vector<std::pair<Element, Element>> proximity(FrithFrame const& f) {
  auto const& l = *f.frame;
  std::size_t n = l.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      for (Element s : f.s.members())
        if (l.leq(a, s) && l.leq(s, b)) rel[a][b] = true;
      if (rel[a][b]) out.emplace_back(a, b);
    }
  for (auto [a, b] : out) {
    bool interpolates = false;
    for (Element c = 0; c < n && !interpolates; ++c) interpolates = rel[a][c] && rel[c][c] && rel[c][b];
    if (!interpolates) throw Error("proximity: no interpolant for " + l.name(a) + ", " + l.name(b));
  }
  for (Element a = 0; a < n; ++a)
    if (rel[a][a] != f.s.contains(a)) throw Error("proximity: reflexive points differ from S at " + l.name(a));
  return out;
}

std::optional<FrithHom> find_frith_isomorphism(FrithFrame const& a, FrithFrame const& b) {
  if (a.frame->size() != b.frame->size() || a.s.size() != b.s.size()) return std::nullopt;
  for (auto const& h : enumerate_frith_homs(a, b)) {
    auto r = morphism_predicates(h);
    if (r.is_iso) return h;
  }
  return std::nullopt;
}

}  // namespace pfw
