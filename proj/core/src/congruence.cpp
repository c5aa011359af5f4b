#include "pfw/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "pfw/error.hpp"

namespace pfw {

namespace {

struct UnionFind {
  std::vector<Element> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Element{0}); }
  Element find(Element x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

std::vector<Element> normalize(std::vector<Element> const& labels) {
  std::unordered_map<Element, Element> first;
  std::vector<Element> out(labels.size());
  for (Element e = 0; e < labels.size(); ++e) {
    auto [it, fresh] = first.emplace(labels[e], e);
    out[e] = it->second;
  }
  return out;
}

// Saturates a union-find partition until it is a congruence.
void saturate(FiniteFrame const& l, UnionFind& uf) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < l.size(); ++x) {
      Element r = uf.find(x);
      if (r == x) continue;
      for (Element c = 0; c < l.size(); ++c) {
        if (uf.unite(l.join(x, c), l.join(r, c))) changed = true;
        if (uf.unite(l.meet(x, c), l.meet(r, c))) changed = true;
      }
    }
  }
}

Congruence from_uf(FramePtr const& l, UnionFind& uf) {
  std::vector<Element> lab(l->size());
  for (Element e = 0; e < l->size(); ++e) lab[e] = uf.find(e);
  return Congruence(l, lab);
}

}  // namespace

Congruence::Congruence(FramePtr l, std::vector<Element> const& labels) : frame_(std::move(l)) {
  if (labels.size() != frame_->size()) throw InvalidInput("congruence: label count mismatch");
  labels_ = normalize(labels);
}

Congruence Congruence::identity(FramePtr l) {
  std::vector<Element> lab(l->size());
  std::iota(lab.begin(), lab.end(), Element{0});
  return Congruence(std::move(l), lab);
}

Congruence Congruence::all(FramePtr l) {
  std::vector<Element> lab(l->size(), 0);
  return Congruence(std::move(l), lab);
}

Congruence Congruence::from_blocks(FramePtr l, std::vector<std::vector<Element>> const& blocks) {
  std::vector<Element> lab(l->size(), static_cast<Element>(-1));
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Element e : blocks[b]) {
      if (e >= l->size()) throw InvalidInput("congruence: element out of range");
      if (lab[e] != static_cast<Element>(-1)) throw InvalidInput("congruence: element in two blocks");
      lab[e] = static_cast<Element>(b);
    }
  for (Element e = 0; e < l->size(); ++e)
    if (lab[e] == static_cast<Element>(-1)) throw InvalidInput("congruence: blocks do not cover the frame");
  return Congruence(std::move(l), lab);
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<std::vector<Element>> out;
  std::unordered_map<Element, std::size_t> slot;
  for (Element e = 0; e < labels_.size(); ++e) {
    auto [it, fresh] = slot.emplace(labels_[e], out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(e);
  }
  return out;
}

std::size_t Congruence::block_count() const {
  std::size_t n = 0;
  for (Element e = 0; e < labels_.size(); ++e)
    if (labels_[e] == e) ++n;
  return n;
}

bool Congruence::leq(Congruence const& o) const {
  for (Element e = 0; e < labels_.size(); ++e)
    if (!o.related(e, labels_[e])) return false;
  return true;
}

bool Congruence::is_identity() const { return block_count() == labels_.size(); }
bool Congruence::is_all() const { return block_count() == 1; }

std::vector<std::pair<Element, Element>> Congruence::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < labels_.size(); ++a)
    for (Element b = 0; b < labels_.size(); ++b)
      if (related(a, b)) out.emplace_back(a, b);
  return out;
}

bool is_congruence(Congruence const& c) {
  auto const& l = *c.frame();
  for (Element x = 0; x < l.size(); ++x) {
    Element r = c.labels()[x];
    if (r == x) continue;
    for (Element z = 0; z < l.size(); ++z) {
      if (!c.related(l.join(x, z), l.join(r, z))) return false;
      if (!c.related(l.meet(x, z), l.meet(r, z))) return false;
    }
  }
  return true;
}

Congruence congruence_generated(FramePtr const& l, std::vector<std::pair<Element, Element>> const& pairs) {
  UnionFind uf(l->size());
  for (auto [a, b] : pairs) {
    if (a >= l->size() || b >= l->size()) throw InvalidInput("congruence: pair out of range");
    uf.unite(a, b);
  }
  saturate(*l, uf);
  return from_uf(l, uf);
}

Congruence congruence_meet(Congruence const& a, Congruence const& b) {
  std::vector<Element> lab(a.labels().size());
  std::unordered_map<std::uint64_t, Element> slot;
  for (Element e = 0; e < lab.size(); ++e) {
    std::uint64_t key = (std::uint64_t{a.labels()[e]} << 32) | b.labels()[e];
    auto [it, fresh] = slot.emplace(key, e);
    lab[e] = it->second;
  }
  return Congruence(a.frame(), lab);
}

Congruence congruence_join(Congruence const& a, Congruence const& b) {
  auto const& l = a.frame();
  UnionFind uf(l->size());
  for (Element e = 0; e < l->size(); ++e) {
    uf.unite(e, a.labels()[e]);
    uf.unite(e, b.labels()[e]);
  }
  saturate(*l, uf);
  return from_uf(l, uf);
}

Congruence nabla(FramePtr const& l, Element a) {
  std::vector<Element> lab(l->size());
  for (Element x = 0; x < l->size(); ++x) lab[x] = l->join(x, a);
  return Congruence(l, lab);
}

Congruence delta(FramePtr const& l, Element a) {
  std::vector<Element> lab(l->size());
  for (Element x = 0; x < l->size(); ++x) lab[x] = l->meet(x, a);
  return Congruence(l, lab);
}

std::pair<Congruence, Congruence> nabla_delta(FramePtr const& l, Element a) {
  auto n = nabla(l, a);
  auto d = delta(l, a);
  if (!(n == congruence_generated(l, {{l->bottom(), a}})))
    throw Error("nabla formula disagrees with the congruence generated by (0, a)");
  if (!(d == congruence_generated(l, {{a, l->top()}})))
    throw Error("delta formula disagrees with the congruence generated by (a, 1)");
  return {n, d};
}

Mask collapsed_points(Congruence const& c) {
  auto const& l = *c.frame();
  Mask q = 0;
  for (std::size_t p = 0; p < l.jir().size(); ++p) {
    Element j = l.ji(p);
    Element below = l.at(l.mask(j) & ~(Mask{1} << p));
    if (c.related(j, below)) q |= Mask{1} << p;
  }
  return q;
}

Congruence congruence_from_points(FramePtr const& l, Mask q) {
  std::vector<Element> lab(l->size());
  std::unordered_map<Mask, Element> first;
  for (Element e = 0; e < l->size(); ++e) {
    auto [it, fresh] = first.emplace(l->mask(e) & ~q, e);
    lab[e] = it->second;
  }
  return Congruence(l, lab);
}

Quotient quotient(Congruence const& c) {
  auto const& lp = c.frame();
  auto const& l = *lp;
  std::vector<Element> reps;
  std::vector<std::size_t> block_of(l.size());
  std::unordered_map<Element, std::size_t> slot;
  for (Element e = 0; e < l.size(); ++e) {
    auto [it, fresh] = slot.emplace(c.labels()[e], reps.size());
    if (fresh) reps.push_back(c.labels()[e]);
    block_of[e] = it->second;
  }
  std::size_t n = reps.size();
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n)), join = meet;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      meet[i][j] = block_of[l.meet(reps[i], reps[j])];
      join[i][j] = block_of[l.join(reps[i], reps[j])];
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(l.name(reps[i]));
  std::size_t top_block = block_of[l.top()];
  std::size_t bot_block = block_of[l.bottom()];
  names[top_block] = "1";
  names[bot_block] = "0";
  {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      for (std::size_t i = 0; i < n; ++i)
        if (i != top_block && i != bot_block) names[i] = "[" + l.name(reps[i]) + "]";
  }
  TableFrame tf = frame_from_table(names, meet, join);
  FrameHom h{lp, tf.frame, std::vector<Element>(l.size())};
  for (Element e = 0; e < l.size(); ++e) h.map[e] = tf.renaming[block_of[e]];
  return {tf.frame, h};
}

Congruence kernel(FrameHom const& h) { return Congruence(h.dom, kernel_labels(h)); }

// ---------------------------------------------------------------------------

std::optional<Element> CongruenceFrame::find(Congruence const& c) const { return find_points(collapsed_points(c)); }

std::optional<Element> CongruenceFrame::find_points(Mask m) const {
  auto it = by_q.find(m);
  if (it == by_q.end()) return std::nullopt;
  return it->second;
}

Element CongruenceFrame::nabla(Element a) const {
  auto e = find_points(base->mask(a));
  if (!e) throw Error("congruence frame does not contain nabla(" + base->name(a) + ")");
  return *e;
}

std::optional<Element> CongruenceFrame::delta(Element a) const {
  return find_points(base->jir().all() & ~base->mask(a));
}

FrameHom CongruenceFrame::nabla_hom() const {
  FrameHom h{base, structure, std::vector<Element>(base->size())};
  for (Element a = 0; a < base->size(); ++a) h.map[a] = nabla(a);
  return h;
}

namespace {

// Collapsed points of ∇_a ∧ Δ_s.
Mask generator_points(FiniteFrame const& l, Element a, Element s) { return l.mask(a) & ~l.mask(s); }

std::string congruence_name(FiniteFrame const& l, Mask q) {
  Mask all = l.jir().all();
  if (q == 0) return "id";
  if (q == all) return "all";
  if (auto a = l.element_of(q)) return "nabla(" + l.name(*a) + ")";
  if (auto a = l.element_of(all & ~q)) return "delta(" + l.name(*a) + ")";
  std::string s = "{";
  bool first = true;
  for (std::size_t p = 0; p < l.jir().size(); ++p)
    if ((q >> p) & 1U) {
      if (!first) s += ",";
      s += l.jir().name(p);
      first = false;
    }
  return s + "}";
}

void finish(CongruenceFrame& cf, std::vector<Mask> const& family, std::vector<std::vector<GeneratorMeet>> decomp) {
  auto const& l = *cf.base;
  std::vector<std::string> names;
  for (Mask m : family) names.push_back(congruence_name(l, m));
  FamilyFrame ff = frame_from_mask_family(family, l.jir().size(), names);
  cf.structure = ff.frame;
  cf.q.assign(ff.frame->size(), 0);
  cf.decomposition.assign(ff.frame->size(), {});
  for (std::size_t i = 0; i < family.size(); ++i) {
    cf.q[ff.member[i]] = family[i];
    cf.decomposition[ff.member[i]] = std::move(decomp[i]);
  }
  for (Element e = 0; e < cf.q.size(); ++e) cf.by_q.emplace(cf.q[e], e);
}

}  // namespace

std::vector<Congruence> congruence_frame_by_closure(FramePtr const& l) {
  std::vector<Congruence> gens;
  std::vector<Congruence> nab, del;
  for (Element a = 0; a < l->size(); ++a) {
    nab.push_back(nabla(l, a));
    del.push_back(delta(l, a));
  }
  std::unordered_set<std::string> seen;
  auto key = [](Congruence const& c) {
    std::string k;
    for (Element x : c.labels()) k += std::to_string(x) + ",";
    return k;
  };
  std::vector<Congruence> out;
  auto add = [&](Congruence c) {
    if (seen.insert(key(c)).second) {
      out.push_back(std::move(c));
      return true;
    }
    return false;
  };
  for (Element a = 0; a < l->size(); ++a)
    for (Element b = 0; b < l->size(); ++b) add(congruence_meet(nab[a], del[b]));
  std::size_t cap = caps().max_congruences;
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (add(congruence_meet(out[i], out[j]))) changed = true;
        if (add(congruence_join(out[i], out[j]))) changed = true;
        if (out.size() > cap) throw CapExceeded("max_congruences", cap, out.size());
      }
  }
  return out;
}

CongruenceFrame congruence_frame(FramePtr const& l, std::size_t verify_up_to) {
  std::size_t nj = l->jir().size();
  std::size_t cap = caps().max_congruences;
  if (nj >= 63 || (std::size_t{1} << nj) > cap) throw CapExceeded("max_congruences", cap, std::size_t{1} << std::min<std::size_t>(nj, 63));
  CongruenceFrame cf;
  cf.base = l;
  cf.s = Sublattice::full(l);
  std::vector<Mask> family;
  std::vector<std::vector<GeneratorMeet>> decomp;
  for (Mask q = 0; q < (Mask{1} << nj); ++q) {
    family.push_back(q);
    std::vector<GeneratorMeet> d;
    for (std::size_t p = 0; p < nj; ++p)
      if ((q >> p) & 1U) {
        Element j = l->ji(p);
        d.push_back({j, l->at(l->mask(j) & ~(Mask{1} << p))});
      }
    decomp.push_back(std::move(d));
  }
  finish(cf, family, std::move(decomp));
  if (nj <= verify_up_to) {
    auto brute = congruence_frame_by_closure(l);
    if (brute.size() != cf.size()) throw Error("congruence frame: closure enumeration found a different count");
    for (auto const& c : brute) {
      auto e = cf.find(c);
      if (!e || !(cf.congruence(*e) == c)) throw Error("congruence frame: closure found an unknown congruence");
    }
  }
  return cf;
}

namespace {

std::vector<Mask> close_under_union(std::vector<Mask> gens, std::vector<std::vector<GeneratorMeet>>* decomp) {
  std::unordered_map<Mask, std::size_t> pos;
  std::vector<Mask> out;
  std::vector<std::vector<GeneratorMeet>> dec;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (pos.emplace(gens[i], out.size()).second) {
      out.push_back(gens[i]);
      if (decomp) dec.push_back((*decomp)[i]);
    }
  }
  std::size_t cap = caps().max_congruences;
  std::size_t n_gen = out.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t g = 0; g < n_gen; ++g) {
      Mask u = out[i] | out[g];
      if (pos.emplace(u, out.size()).second) {
        out.push_back(u);
        if (decomp) {
          auto d = dec[i];
          for (auto const& x : dec[g])
            if (std::find(d.begin(), d.end(), x) == d.end()) d.push_back(x);
          dec.push_back(std::move(d));
        }
        if (out.size() > cap) throw CapExceeded("max_congruences", cap, out.size());
      }
    }
  }
  if (decomp) *decomp = std::move(dec);
  return out;
}

}  // namespace

CongruenceFrame relative_congruence_frame(Sublattice const& s) {
  auto const& lp = s.parent();
  auto const& l = *lp;
  std::vector<Mask> gens;
  std::vector<std::vector<GeneratorMeet>> decomp;
  for (Element a = 0; a < l.size(); ++a)
    for (Element t : s.members()) {
      gens.push_back(generator_points(l, a, t));
      decomp.push_back({{a, t}});
    }
  std::vector<Mask> family = close_under_union(gens, &decomp);
  // Meets of generator meets are generator meets, so the union closure is
  // already closed under intersection; check it.
  std::unordered_set<Mask> in(family.begin(), family.end());
  for (Mask x : family)
    for (Mask y : family)
      if (!in.count(x & y)) throw Error("relative congruence frame: union closure is not meet-closed");
  CongruenceFrame cf;
  cf.base = lp;
  cf.s = s;
  finish(cf, family, std::move(decomp));
  // ∇ must be a one-to-one frame hom.
  HomReport r = hom_validate(cf.nabla_hom());
  if (!r.is_frame_hom || !r.is_injective) throw Error("relative congruence frame: nabla is not an embedding");
  return cf;
}

std::vector<Mask> relative_congruence_points_from_s(Sublattice const& s) {
  auto const& l = *s.parent();
  std::vector<Mask> gens;
  for (Element a : s.members())
    for (Element t : s.members()) gens.push_back(generator_points(l, a, t));
  auto closed = close_under_union(gens, nullptr);
  std::sort(closed.begin(), closed.end());
  return closed;
}

FrameHom extend_hom(FrameHom const& h, CongruenceFrame const& cf) {
  auto const& l = *cf.base;
  auto const& m = *h.cod;
  if (h.dom->size() != l.size()) throw PreconditionError("extend_hom: hom domain is not the base frame");
  std::vector<Element> comp(l.size(), 0);
  for (Element t : cf.s.members()) {
    auto c = m.complement(h(t));
    if (!c)
      throw PreconditionError("extend_hom: h(" + l.name(t) + ") = " + m.name(h(t)) + " is not complemented");
    comp[t] = *c;
  }
  auto gen_image = [&](GeneratorMeet g) { return m.meet(h(g.a), comp[g.s]); };
  FrameHom out{cf.structure, h.cod, std::vector<Element>(cf.size())};
  // All generator meets, to cross-check the recorded decompositions.
  std::vector<std::pair<Mask, Element>> gens;
  for (Element a = 0; a < l.size(); ++a)
    for (Element t : cf.s.members()) gens.emplace_back(generator_points(l, a, t), gen_image({a, t}));
  for (Element e = 0; e < cf.size(); ++e) {
    Mask acc = 0;
    for (auto g : cf.decomposition[e]) acc |= m.mask(gen_image(g));
    Mask below = 0;
    for (auto [q, img] : gens)
      if ((q & ~cf.q[e]) == 0) below |= m.mask(img);
    if (acc != below) throw Error("extend_hom: decomposition and generator join disagree");
    out.map[e] = m.at(acc);
  }
  HomReport r = hom_validate(out);
  if (!r.is_frame_hom) throw Error("extend_hom: extension is not a frame hom: " + r.witness);
  for (Element a = 0; a < l.size(); ++a)
    if (out(cf.nabla(a)) != h(a)) throw Error("extend_hom: extension does not restrict to h");
  return out;
}

FrameHom extend_to_congruences(FrameHom const& h, CongruenceFrame const& src, CongruenceFrame const& dst) {
  for (Element t : src.s.members())
    if (!dst.s.contains(h(t)))
      throw PreconditionError("extend_to_congruences: h(" + src.base->name(t) + ") is not in the target sublattice");
  FrameHom nh = compose(dst.nabla_hom(), h);
  FrameHom out = extend_hom(nh, src);
  for (Element t : src.s.members()) {
    auto d_src = src.delta(t);
    auto d_dst = dst.delta(h(t));
    if (!d_src || !d_dst || out(*d_src) != *d_dst) throw Error("extend_to_congruences: delta not preserved");
  }
  return out;
}

bool is_frith_congruence(Sublattice const& s, Congruence const& c) {
  std::vector<std::pair<Element, Element>> restricted;
  for (Element a : s.members())
    for (Element b : s.members())
      if (a < b && c.related(a, b)) restricted.emplace_back(a, b);
  bool by_restriction = congruence_generated(s.parent(), restricted) == c;
  if (is_join_dense(s)) {
    bool member = relative_congruence_frame(s).find(c).has_value();
    if (member != by_restriction) throw Error("is_frith_congruence: restriction test and membership test disagree");
  }
  return by_restriction;
}

}  // namespace pfw
