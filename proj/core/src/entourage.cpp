#include "pfw/entourage.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "pfw/error.hpp"

namespace pfw {

namespace {

std::vector<std::vector<Element>> lower_cover_lists(FiniteFrame const& l) {
  std::vector<std::vector<Element>> out(l.size());
  for (Element e = 0; e < l.size(); ++e) out[e] = l.lower_covers(e);
  return out;
}

struct Saturator {
  FiniteFrame const& left;
  FiniteFrame const& right;
  std::size_t m;
  std::vector<std::vector<Element>> lc_left;
  std::vector<std::vector<Element>> lc_right;
  Bits bits;
  std::vector<std::size_t> stack;

  Saturator(FiniteFrame const& l, FiniteFrame const& r, Bits seed)
      : left(l), right(r), m(r.size()), lc_left(lower_cover_lists(l)), lc_right(lower_cover_lists(r)),
        bits(std::move(seed)) {}

  void add(Element x, Element y) {
    std::size_t i = x * m + y;
    if (bits.test(i)) return;
    bits.set(i);
    stack.push_back(i);
  }

  void down_close() {
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      auto x = static_cast<Element>(i / m);
      auto y = static_cast<Element>(i % m);
      for (Element x2 : lc_left[x]) add(x2, y);
      for (Element y2 : lc_right[y]) add(x, y2);
    }
  }

  void run() {
    for (Element x = 0; x < left.size(); ++x) add(x, right.bottom());
    for (Element y = 0; y < right.size(); ++y) add(left.bottom(), y);
    bits.for_each([&](std::size_t i) { stack.push_back(i); });
    down_close();
    bool changed = true;
    while (changed) {
      changed = false;
      for (Element y = 0; y < right.size(); ++y) {
        Mask acc = 0;
        for (Element x = 0; x < left.size(); ++x)
          if (bits.test(x * m + y)) acc |= left.mask(x);
        Element top = left.at(acc);
        if (!bits.test(top * m + y)) {
          add(top, y);
          changed = true;
        }
      }
      for (Element x = 0; x < left.size(); ++x) {
        Mask acc = 0;
        for (Element y = 0; y < right.size(); ++y)
          if (bits.test(x * m + y)) acc |= right.mask(y);
        Element top = right.at(acc);
        if (!bits.test(x * m + top)) {
          add(x, top);
          changed = true;
        }
      }
      down_close();
    }
  }
};

void require_same(CIdeal const& a, CIdeal const& b, char const* what) {
  if (a.left() != b.left() || a.right() != b.right())
    throw PreconditionError(std::string(what) + ": C-ideals over different frames");
}

}  // namespace

CIdeal::CIdeal(FramePtr left, FramePtr right, Bits pairs)
    : left_(std::move(left)), right_(std::move(right)), bits_(std::move(pairs)) {
  if (bits_.size() != left_->size() * right_->size()) throw InvalidInput("C-ideal: pair set has the wrong size");
}

std::vector<std::pair<Element, Element>> CIdeal::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  std::size_t m = right_->size();
  bits_.for_each([&](std::size_t i) { out.emplace_back(static_cast<Element>(i / m), static_cast<Element>(i % m)); });
  return out;
}

Element CIdeal::column_max(Element y) const {
  Mask acc = 0;
  for (Element x = 0; x < left_->size(); ++x)
    if (contains(x, y)) acc |= left_->mask(x);
  return left_->at(acc);
}

Element CIdeal::row_max(Element x) const {
  Mask acc = 0;
  for (Element y = 0; y < right_->size(); ++y)
    if (contains(x, y)) acc |= right_->mask(y);
  return right_->at(acc);
}

bool is_cideal(FiniteFrame const& left, FiniteFrame const& right, Bits const& pairs) {
  std::size_t m = right.size();
  if (pairs.size() != left.size() * m) return false;
  auto in = [&](Element x, Element y) { return pairs.test(x * m + y); };
  for (Element x = 0; x < left.size(); ++x)
    for (Element y = 0; y < m; ++y) {
      if (!in(x, y)) continue;
      for (Element x2 = 0; x2 < left.size(); ++x2)
        for (Element y2 = 0; y2 < m; ++y2)
          if (left.leq(x2, x) && right.leq(y2, y) && !in(x2, y2)) return false;
    }
  for (Element y = 0; y < m; ++y) {
    Mask acc = 0;
    for (Element x = 0; x < left.size(); ++x)
      if (in(x, y)) acc |= left.mask(x);
    if (!in(left.at(acc), y)) return false;
  }
  for (Element x = 0; x < left.size(); ++x) {
    Mask acc = 0;
    for (Element y = 0; y < m; ++y)
      if (in(x, y)) acc |= right.mask(y);
    if (!in(x, right.at(acc))) return false;
  }
  return true;
}

CIdeal cideal_saturate(FramePtr const& left, FramePtr const& right, Bits seed) {
  Saturator s(*left, *right, std::move(seed));
  s.run();
  return CIdeal(left, right, std::move(s.bits));
}

CIdeal cideal_generated(FramePtr const& left, FramePtr const& right,
                        std::vector<std::pair<Element, Element>> const& seed) {
  Bits b(left->size() * right->size());
  for (auto [x, y] : seed) {
    if (x >= left->size() || y >= right->size()) throw InvalidInput("C-ideal: pair out of range");
    b.set(x * right->size() + y);
  }
  return cideal_saturate(left, right, std::move(b));
}

CIdeal cideal_generated(FramePtr const& l, std::vector<std::pair<Element, Element>> const& seed) {
  return cideal_generated(l, l, seed);
}

CIdeal oplus(FramePtr const& left, FramePtr const& right, Element a, Element b) {
  CIdeal gen = cideal_generated(left, right, {{a, b}});
  std::size_t m = right->size();
  Bits formula(left->size() * m);
  for (Element x = 0; x < left->size(); ++x)
    for (Element y = 0; y < m; ++y)
      if ((left->leq(x, a) && right->leq(y, b)) || x == left->bottom() || y == right->bottom())
        formula.set(x * m + y);
  if (!(formula == gen.bits())) throw Error("oplus: generated C-ideal differs from the down-set formula");
  return gen;
}

CIdeal oplus(FramePtr const& l, Element a, Element b) { return oplus(l, l, a, b); }
CIdeal cideal_bottom(FramePtr const& l) { return oplus(l, l->bottom(), l->bottom()); }
CIdeal cideal_top(FramePtr const& l) { return oplus(l, l->top(), l->top()); }

CIdeal cideal_meet(CIdeal const& a, CIdeal const& b) {
  require_same(a, b, "cideal_meet");
  return CIdeal(a.left(), a.right(), a.bits() & b.bits());
}

CIdeal cideal_join(CIdeal const& a, CIdeal const& b) {
  require_same(a, b, "cideal_join");
  return cideal_saturate(a.left(), a.right(), a.bits() | b.bits());
}

CIdeal inverse(CIdeal const& a) {
  std::size_t n = a.left()->size();
  std::size_t m = a.right()->size();
  Bits b(n * m);
  for (auto [x, y] : a.pairs()) b.set(y * n + x);
  return CIdeal(a.right(), a.left(), std::move(b));
}

CIdeal compose(CIdeal const& a, CIdeal const& b) {
  if (a.right()->size() != b.left()->size()) throw PreconditionError("compose: middle frames differ");
  auto const& mid = *a.right();
  std::vector<std::pair<Element, Element>> seed;
  for (Element c = 0; c < mid.size(); ++c) {
    if (c == mid.bottom()) continue;
    seed.emplace_back(a.column_max(c), b.row_max(c));
  }
  return cideal_generated(a.left(), b.right(), seed);
}

Element diagonal_join(CIdeal const& e) {
  auto const& l = *e.left();
  Mask acc = 0;
  for (Element x = 0; x < l.size(); ++x)
    if (e.contains(x, x)) acc |= l.mask(x);
  return l.at(acc);
}

EntouragePredicates entourage_predicates(CIdeal const& e) {
  if (e.left() != e.right()) throw PreconditionError("entourage_predicates: not a C-ideal of L ⊕ L");
  auto const& lp = e.left();
  EntouragePredicates r;
  r.is_entourage = diagonal_join(e) == lp->top();
  r.is_transitive = compose(e, e) == e;
  // Finite: the diagonal members themselves give the candidate cover.
  std::vector<std::pair<Element, Element>> diag;
  Mask cover = 0;
  for (Element x = 0; x < lp->size(); ++x)
    if (e.contains(x, x)) {
      diag.emplace_back(x, x);
      cover |= lp->mask(x);
    }
  r.is_finite = lp->at(cover) == lp->top() && cideal_generated(lp, diag).leq(e);
  if (r.is_finite != r.is_entourage) throw Error("entourage_predicates: finite and entourage disagree on a finite frame");
  r.inverse = inverse(e);
  r.is_symmetric = r.inverse == e;
  return r;
}

CIdeal e_r(FramePtr const& l, Element r) {
  Element rs = l->pseudocomplement(r);
  std::size_t n = l->size();
  Bits b(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (l->leq(x, r) || l->leq(y, rs)) b.set(x * n + y);
  if (!is_cideal(*l, *l, b)) throw Error("e_r: membership law is not a C-ideal");
  Bits uni = oplus(l, r, l->top()).bits() | oplus(l, l->top(), rs).bits();
  if (!(uni == b)) throw Error("e_r: membership law differs from (r⊕1) ∪ (1⊕r*)");
  return CIdeal(l, l, std::move(b));
}

CIdeal image(FrameHom const& h, CIdeal const& e) {
  if (e.left() != h.dom || e.right() != h.dom) throw PreconditionError("image: C-ideal not over the hom domain");
  std::vector<std::pair<Element, Element>> seed;
  for (auto [x, y] : e.pairs()) seed.emplace_back(h(x), h(y));
  return cideal_generated(h.cod, seed);
}

CIdeal QuasiUniformity::min() const {
  if (basis.empty()) return cideal_top(frame);
  CIdeal m = basis.front();
  for (std::size_t i = 1; i < basis.size(); ++i) m = cideal_meet(m, basis[i]);
  return m;
}

std::vector<CIdeal> close_under_meets(std::vector<CIdeal> family) {
  std::unordered_set<CIdeal, CIdealHash> seen;
  std::vector<CIdeal> out;
  for (auto& c : family)
    if (seen.insert(c).second) out.push_back(c);
  std::size_t cap = caps().max_cideals;
  std::size_t n_gen = out.size();
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t g = 0; g < n_gen; ++g) {
      CIdeal m = cideal_meet(out[i], out[g]);
      if (seen.insert(m).second) {
        out.push_back(m);
        if (out.size() > cap) throw CapExceeded("max_cideals", cap, out.size());
      }
    }
  return out;
}

WitnessRelations witness_relations(FramePtr const& lp, std::vector<CIdeal> const& family) {
  auto const& l = *lp;
  // thresholds[i][b]: least a with b ⊲ᵢ a witnessed by some family member;
  // b ⊲ a iff one of them is below a.
  std::vector<std::vector<Element>> th1(l.size()), th2(l.size());
  auto threshold = [&](CIdeal const& c) {
    Mask acc = 0;
    for (auto [x, y] : c.pairs())
      if (x != l.bottom() && y != l.bottom()) acc |= l.mask(x) | l.mask(y);
    return l.at(acc);
  };
  for (Element b = 0; b < l.size(); ++b) {
    CIdeal bb = oplus(lp, b, b);
    for (auto const& a : family) {
      th1[b].push_back(threshold(compose(a, bb)));
      th2[b].push_back(threshold(compose(bb, a)));
    }
  }
  WitnessRelations w;
  for (Element a = 0; a < l.size(); ++a) {
    Mask j1 = 0, j2 = 0;
    for (Element b = 0; b < l.size(); ++b) {
      if (std::any_of(th1[b].begin(), th1[b].end(), [&](Element t) { return l.leq(t, a); })) {
        w.lhd1.emplace_back(b, a);
        j1 |= l.mask(b);
      }
      if (std::any_of(th2[b].begin(), th2[b].end(), [&](Element t) { return l.leq(t, a); })) {
        w.lhd2.emplace_back(b, a);
        j2 |= l.mask(b);
      }
    }
    if (l.at(j1) == a) w.l1.push_back(a);
    if (l.at(j2) == a) w.l2.push_back(a);
  }
  return w;
}

QuReport qu_report(QuasiUniformity const& q) {
  QuReport r;
  auto const& l = *q.frame;
  r.basis_entourages = !q.basis.empty();
  for (auto const& e : q.basis)
    if (diagonal_join(e) != l.top()) r.basis_entourages = false;
  r.filter_basis = !q.basis.empty();
  for (std::size_t i = 0; i < q.basis.size() && r.filter_basis; ++i)
    for (std::size_t j = i + 1; j < q.basis.size() && r.filter_basis; ++j) {
      CIdeal m = cideal_meet(q.basis[i], q.basis[j]);
      r.filter_basis = std::any_of(q.basis.begin(), q.basis.end(), [&](CIdeal const& g) { return g.leq(m); });
    }
  r.qu1 = r.basis_entourages && r.filter_basis;
  std::vector<CIdeal> squares;
  for (auto const& g : q.basis) squares.push_back(compose(g, g));
  r.qu2 = true;
  for (auto const& e : q.basis)
    if (std::none_of(squares.begin(), squares.end(), [&](CIdeal const& s) { return s.leq(e); })) r.qu2 = false;
  WitnessRelations w = witness_relations(q.frame, q.basis);
  std::vector<Element> both = w.l1;
  both.insert(both.end(), w.l2.begin(), w.l2.end());
  r.qu3 = subframe_generated(q.frame, both).is_full();
  CIdeal m = q.min();
  r.qu4 = std::all_of(q.basis.begin(), q.basis.end(), [&](CIdeal const& e) { return m.leq(inverse(e)); });
  r.is_transitive = compose(m, m) == m;
  r.is_totally_bounded = diagonal_join(m) == l.top();
  return r;
}

bool filters_equal(QuasiUniformity const& a, QuasiUniformity const& b) {
  CIdeal ma = a.min();
  CIdeal mb = b.min();
  for (auto const& e : a.basis)
    if (!mb.leq(e)) return false;
  for (auto const& e : b.basis)
    if (!ma.leq(e)) return false;
  return true;
}

QuasiUniformity filter_from_sublattice(FramePtr const& k, std::vector<Element> const& r) {
  std::vector<CIdeal> gens;
  std::vector<Element> stars;
  for (Element x : r) {
    auto c = k->complement(x);
    if (!c) throw PreconditionError("filter_from_sublattice: " + k->name(x) + " is not complemented");
    stars.push_back(*c);
    gens.push_back(e_r(k, x));
  }
  if (gens.empty()) gens.push_back(cideal_top(k));
  QuasiUniformity q{k, close_under_meets(std::move(gens))};
  WitnessRelations w = witness_relations(k, q.basis);
  if (w.l1 != subframe_generated(k, r).members()) throw Error("filter_from_sublattice: L1 differs from the subframe generated by R");
  if (w.l2 != subframe_generated(k, stars).members())
    throw Error("filter_from_sublattice: L2 differs from the subframe generated by R*");
  return q;
}

ImageFilter image_filter(FrameHom const& h, QuasiUniformity const& source, QuasiUniformity const& target) {
  ImageFilter f;
  for (auto const& e : source.basis) f.images.push_back(image(h, e));
  CIdeal tmin = target.min();
  f.into_target = std::all_of(f.images.begin(), f.images.end(), [&](CIdeal const& e) { return tmin.leq(e); });
  CIdeal gen = cideal_top(target.frame);
  for (auto const& e : f.images) gen = cideal_meet(gen, e);
  f.target_generated = std::all_of(target.basis.begin(), target.basis.end(), [&](CIdeal const& e) { return gen.leq(e); });
  return f;
}

bool is_quniform_hom(FrameHom const& h, QuasiUniformity const& source, QuasiUniformity const& target) {
  CIdeal tmin = target.min();
  for (auto const& e : source.basis)
    if (!tmin.leq(image(h, e))) return false;
  return true;
}

PartitionWitness partition_witness(CIdeal const& e) {
  auto const& lp = e.left();
  auto const& l = *lp;
  std::vector<Element> diag;
  for (Element x = 1; x < l.size(); ++x)
    if (e.contains(x, x)) diag.push_back(x);
  std::vector<Element> c;
  for (Element x : diag)
    if (std::none_of(diag.begin(), diag.end(), [&](Element y) { return y != x && l.leq(x, y); })) c.push_back(x);
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < c.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < c.size() && !merged; ++j)
        if (l.meet(c[i], c[j]) != l.bottom()) {
          Element u = l.join(c[i], c[j]);
          if (!e.contains(u, u)) throw Error("partition_witness: merged cover member leaves the diagonal");
          c.erase(c.begin() + static_cast<std::ptrdiff_t>(j));
          c[i] = u;
          merged = true;
        }
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  if (l.join_of(c) != l.top()) throw Error("partition_witness: cover does not join to 1");
  PartitionWitness w{e, c, {}, {}};
  CIdeal meet = cideal_top(lp);
  for (Element x : c) {
    Mask rx = 0, rs = 0;
    for (Element y : c) {
      if (e.contains(x, y))
        rs |= l.mask(y);
      else
        rx |= l.mask(y);
    }
    Element r = l.at(rx);
    Element s = l.at(rs);
    auto comp = l.complement(r);
    if (!comp || *comp != s) throw Error("partition_witness: r_x* is not the complement of r_x");
    w.r.push_back(r);
    w.r_star.push_back(s);
    meet = cideal_meet(meet, e_r(lp, r));
  }
  if (!(meet == e)) throw Error("partition_witness: E differs from the intersection of the E_{r_x}");
  return w;
}

ExtractedR extract_R(QuasiUniformity const& q) {
  auto const& kp = q.frame;
  CIdeal m = q.min();
  if (!(compose(m, m) == m)) throw PreconditionError("extract_R: quasi-uniformity is not transitive");
  if (diagonal_join(m) != kp->top()) throw PreconditionError("extract_R: quasi-uniformity is not totally bounded");
  std::vector<Element> r;
  for (Element x = 0; x < kp->size(); ++x)
    if (kp->complement(x) && m.leq(e_r(kp, x))) r.push_back(x);
  if (!is_sublattice(*kp, r)) throw Error("extract_R: R is not a sublattice");
  ExtractedR out{Sublattice(kp, r), {}};
  for (auto const& e : q.basis) {
    if (!(compose(e, e) == e) || diagonal_join(e) != kp->top()) continue;
    PartitionWitness w = partition_witness(e);
    for (Element x : w.r)
      if (!out.r.contains(x)) throw Error("extract_R: some r_x lies outside R");
    out.witnesses.push_back(std::move(w));
  }
  if (!filters_equal(q, filter_from_sublattice(kp, r))) throw Error("extract_R: the filter generated by R differs");
  return out;
}

FrithQuni frith_to_quni(Sublattice const& s) {
  CongruenceFrame cf = relative_congruence_frame(s);
  std::vector<Element> r;
  for (Element t : s.members()) r.push_back(cf.nabla(t));
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  QuasiUniformity q = filter_from_sublattice(cf.structure, r);
  return {std::move(cf), std::move(q)};
}

FrameHom frith_to_quni_hom(FrameHom const& h, FrithQuni const& src, FrithQuni const& dst) {
  FrameHom hb = extend_to_congruences(h, src.cf, dst.cf);
  if (!is_quniform_hom(hb, src.q, dst.q)) throw Error("frith_to_quni_hom: extension is not a quasi-uniform homomorphism");
  return hb;
}

Gamma gamma(QuasiUniformity const& q) {
  ExtractedR ext = extract_R(q);
  Sublattice l = subframe_generated(q.frame, ext.r.members());
  Materialized mat = materialize(l);
  Sublattice s = Sublattice::full(mat.frame);
  FrithQuni fq = frith_to_quni(s);
  FrameHom e{mat.frame, q.frame, mat.embed};
  FrameHom g = extend_hom(e, fq.cf);
  HomReport hr = hom_validate(g);
  ImageFilter f = image_filter(g, fq.q, q);
  Gamma out{std::move(mat), std::move(s), std::move(fq), std::move(g)};
  out.dense = hr.is_dense;
  out.surjective = hr.is_surjective;
  out.quniform = f.into_target;
  out.extremal = hr.is_surjective && f.into_target && f.target_generated;
  out.is_iso = out.extremal && hr.is_injective;
  return out;
}

QuasiUniformity uniform_reflection(QuasiUniformity const& q) {
  std::vector<CIdeal> basis;
  for (auto const& e : q.basis) basis.push_back(cideal_meet(e, inverse(e)));
  QuasiUniformity out{q.frame, std::move(basis)};
  if (!qu_report(out).qu4) throw Error("uniform_reflection: result is not inverse-closed");
  return out;
}

SymSquare sym_square(FrithQuni const& fq) {
  auto const& cf = fq.cf;
  std::vector<Element> gens;
  for (Element t : cf.s.members()) {
    gens.push_back(cf.nabla(t));
    auto d = cf.delta(t);
    if (!d) throw Error("sym_square: delta missing from the congruence frame");
    gens.push_back(*d);
  }
  // E_{a∧b} and E_{a∨b} contain E_a ∩ E_b, so the generators of S̄ give the same filter as all of S̄.
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  SymSquare sq{uniform_reflection(fq.q), filter_from_sublattice(cf.structure, gens)};
  sq.equal = filters_equal(sq.reflected, sq.from_sbar);
  return sq;
}

CoreflectionReport coreflection_check(QuasiUniformity const& q, Gamma const& g, Sublattice const& t) {
  CoreflectionReport rep;
  FrithQuni fm = frith_to_quni(t);
  std::set<std::vector<Element>> quniform;
  for (auto const& h : enumerate_homs(fm.cf.structure, q.frame))
    if (is_quniform_hom(h, fm.q, q)) quniform.insert(h.map);
  rep.quniform_homs = quniform.size();
  std::set<std::vector<Element>> through_gamma;
  auto frith = enumerate_homs_preserving(t, g.s);
  rep.frith_homs = frith.size();
  for (auto const& fh : frith) {
    FrameHom bar = frith_to_quni_hom(fh, fm, g.source);
    FrameHom comp = compose(g.hom, bar);
    if (!is_quniform_hom(comp, fm.q, q)) {
      rep.witness = "gamma composed with an extension is not quasi-uniform";
      return rep;
    }
    through_gamma.insert(comp.map);
  }
  rep.injective = through_gamma.size() == frith.size();
  rep.bijective = rep.injective && through_gamma == quniform;
  if (!rep.injective)
    rep.witness = "two Frith homs give the same quasi-uniform hom";
  else if (!rep.bijective)
    rep.witness = "quasi-uniform hom count " + std::to_string(quniform.size()) + " against " +
                  std::to_string(through_gamma.size()) + " through gamma";
  return rep;
}

}  // namespace pfw
