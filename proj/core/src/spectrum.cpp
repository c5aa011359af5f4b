#include "pfw/spectrum.hpp"

#include <algorithm>
#include <set>

#include "pfw/error.hpp"
#include "pfw/predicates.hpp"

namespace pfw {

Subset Spectrum::hat(Element a) const {
  Subset out = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].filter.test(a)) out |= Subset{1} << i;
  return out;
}

std::optional<std::size_t> Spectrum::find(std::vector<Element> const& map) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].hom.map == map) return i;
  return std::nullopt;
}

Spectrum points(FramePtr const& l) {
  auto const& fr = *l;
  Spectrum sp{l, two_frame(), {}};
  for (auto const& f : enumerate_filters(l)) {
    if (f.test(fr.bottom())) continue;
    bool prime = true;
    for (Element a = 0; a < fr.size() && prime; ++a)
      for (Element b = a + 1; b < fr.size(); ++b)
        if (f.test(fr.join(a, b)) && !f.test(a) && !f.test(b)) {
          prime = false;
          break;
        }
    if (!prime) continue;
    std::vector<Element> map(fr.size());
    Element least = fr.top();
    for (Element a = 0; a < fr.size(); ++a) {
      map[a] = f.test(a) ? sp.two->top() : sp.two->bottom();
      if (f.test(a)) least = fr.meet(least, a);
    }
    sp.points.push_back({FrameHom{l, sp.two, map}, f, fr.name(least)});
  }
  std::set<std::vector<Element>> via_filters, via_homs;
  for (auto const& p : sp.points) via_filters.insert(p.hom.map);
  for (auto const& h : enumerate_homs(l, sp.two)) via_homs.insert(h.map);
  if (via_filters != via_homs) throw Error("points: prime filters differ from homs into 2");
  return sp;
}

PtFrith pt_frith(FrithFrame const& f) {
  PtFrith out{f, points(f.frame), nullptr};
  auto const& l = *f.frame;
  std::vector<std::string> names;
  for (auto const& p : out.sp.points) names.push_back(p.name);
  std::vector<Subset> lattice;
  for (Element s : f.s.members()) lattice.push_back(out.sp.hat(s));
  for (Element a : f.s.members())
    for (Element b : f.s.members())
      if (out.sp.hat(l.meet(a, b)) != (out.sp.hat(a) & out.sp.hat(b)) ||
          out.sp.hat(l.join(a, b)) != (out.sp.hat(a) | out.sp.hat(b)))
        throw Error("pt_frith: hat map is not a lattice hom");
  out.space = make_pervin(names, lattice);
  return out;
}

PervinMap pt_map(FrithHom const& h, PtFrith const& of_cod, PtFrith const& of_dom) {
  PervinMap out{of_cod.space, of_dom.space, {}};
  for (auto const& p : of_cod.sp.points) {
    auto idx = of_dom.sp.find(compose(p.hom, h.hom).map);
    if (!idx) throw Error("pt_map: p ∘ h is not a point");
    out.map.push_back(*idx);
  }
  for (Element s : h.dom.s.members())
    if (out.preimage(of_dom.sp.hat(s)) != of_cod.sp.hat(h(s)))
      throw Error("pt_map: preimage of a basic open differs at " + h.dom.frame->name(s));
  if (!is_pervin_map(out)) throw Error("pt_map: not a Pervin map");
  return out;
}

OmegaFrith omega_frith(PervinPtr const& x) {
  OmegaFrith out{x, omega_topology(x), {}, {}};
  out.f = make_frith(out.omega.frame);
  out.subset.resize(out.omega.frame->size());
  auto const& lat = x->lattice();
  for (std::size_t i = 0; i < lat.size(); ++i) out.subset[out.omega.element[i]] = lat[i];
  return out;
}

FrithHom omega_map(PervinMap const& g, OmegaFrith const& of_dom, OmegaFrith const& of_cod) {
  std::vector<Element> map(of_cod.omega.frame->size());
  for (Element e = 0; e < map.size(); ++e) map[e] = of_dom.omega.of(*g.dom, g.preimage(of_cod.subset[e]));
  return make_frith_hom(of_cod.f, of_dom.f, {of_cod.omega.frame, of_dom.omega.frame, map});
}

namespace {

PervinMap unit_into(OmegaFrith const& o, PtFrith const& p) {
  PervinMap eta{o.space, p.space, {}};
  for (std::size_t i = 0; i < o.space->size(); ++i) {
    std::vector<Element> map(o.omega.frame->size());
    for (Element a = 0; a < map.size(); ++a)
      map[a] = ((o.subset[a] >> i) & 1U) ? p.sp.two->top() : p.sp.two->bottom();
    auto idx = p.sp.find(map);
    if (!idx) throw Error("adjunction unit: neighbourhood filter is not a point");
    eta.map.push_back(*idx);
  }
  return eta;
}

FrameHom counit_into(PtFrith const& p, OmegaFrith const& o) {
  std::vector<Element> map(p.f.frame->size());
  for (Element a = 0; a < map.size(); ++a) map[a] = o.omega.of(*p.space, p.sp.hat(a));
  return {p.f.frame, o.omega.frame, map};
}

}  // namespace

PervinMap adjunction_unit(PervinPtr const& x) {
  OmegaFrith o = omega_frith(x);
  return unit_into(o, pt_frith(o.f));
}

FrithHom adjunction_counit(FrithFrame const& f) {
  PtFrith p = pt_frith(f);
  OmegaFrith o = omega_frith(p.space);
  return make_frith_hom(f, o.f, counit_into(p, o));
}

AdjunctionReport adjunction_check(PervinPtr const& x, FrithFrame const& f) {
  AdjunctionReport r;
  PtFrith p = pt_frith(f);
  OmegaFrith o = omega_frith(x);
  auto maps = enumerate_pervin_maps(x, p.space);
  auto homs = enumerate_frith_homs(f, o.f);
  r.pervin_maps = maps.size();
  r.frith_homs = homs.size();

  auto forward = [&](PervinMap const& phi) {
    std::vector<Element> map(f.frame->size());
    for (Element a = 0; a < map.size(); ++a) map[a] = o.omega.of(*x, phi.preimage(p.sp.hat(a)));
    return make_frith_hom(f, o.f, {f.frame, o.omega.frame, map}).hom.map;
  };
  auto backward = [&](FrithHom const& h) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x->size(); ++i) {
      std::vector<Element> map(f.frame->size());
      for (Element a = 0; a < map.size(); ++a)
        map[a] = ((o.subset[h(a)] >> i) & 1U) ? p.sp.two->top() : p.sp.two->bottom();
      auto idx = p.sp.find(map);
      if (!idx) return std::nullopt;
      out.push_back(*idx);
    }
    if (!is_pervin_map({x, p.space, out})) return std::nullopt;
    return out;
  };

  r.bijection = maps.size() == homs.size();
  std::set<std::vector<Element>> images;
  for (auto const& phi : maps) {
    auto h = forward(phi);
    images.insert(h);
    auto back = backward({f, o.f, {f.frame, o.omega.frame, h}});
    if (!back || *back != phi.map) {
      r.bijection = false;
      r.witness = "Pervin map does not survive the round trip";
    }
  }
  if (images.size() != maps.size()) r.bijection = false;
  for (auto const& h : homs) {
    auto back = backward(h);
    if (!back || forward({x, p.space, *back}) != h.hom.map) {
      r.bijection = false;
      r.witness = "Frith hom does not survive the round trip";
    }
  }

  PtFrith pto = pt_frith(o.f);
  r.sober = morphism_predicates(unit_into(o, pto)).is_iso;
  OmegaFrith op = omega_frith(p.space);
  auto counit = make_frith_hom(f, op.f, counit_into(p, op));
  r.spatial = morphism_predicates(counit).is_iso;
  r.t0 = is_t0(*x);
  return r;
}

AlphaData alpha_check(FrithFrame const& f) {
  AlphaData d{pt_frith(f), nullptr, fsym(f), {}, {}, false, false, false};
  d.psym_pt = psym(d.pt.space);
  d.pt_sym = pt_frith(d.fs.obj);
  d.alpha = PervinMap{d.psym_pt, d.pt_sym.space, {}};
  for (auto const& p : d.pt.sp.points) {
    FrameHom ext = extend_hom(p.hom, d.fs.cf);
    std::vector<Element> map = ext.map;
    auto idx = d.pt_sym.sp.find(map);
    if (!idx) throw Error("alpha: extension of a point is not a point");
    std::size_t lifts = 0;
    for (auto const& q : d.pt_sym.sp.points)
      if (compose(q.hom, d.fs.unit.hom).map == p.hom.map) ++lifts;
    if (lifts != 1) throw Error("alpha: point " + p.name + " has " + std::to_string(lifts) + " lifts");
    d.alpha.map.push_back(*idx);
  }
  std::set<std::size_t> hit(d.alpha.map.begin(), d.alpha.map.end());
  d.bijective = hit.size() == d.alpha.map.size() && hit.size() == d.pt_sym.space->size();
  d.is_iso = is_pervin_map(d.alpha) && morphism_predicates(d.alpha).is_iso;
  d.preimages = true;
  Subset all = d.psym_pt->all();
  for (Element s : f.s.members()) {
    if (d.alpha.preimage(d.pt_sym.sp.hat(d.fs.cf.nabla(s))) != d.pt.sp.hat(s)) d.preimages = false;
    auto del = d.fs.cf.delta(s);
    if (!del || d.alpha.preimage(d.pt_sym.sp.hat(*del)) != (all & ~d.pt.sp.hat(s))) d.preimages = false;
  }
  return d;
}

bool alpha_natural(FrithHom const& h, AlphaData const& df, AlphaData const& dg) {
  FrameHom hbar = extend_to_congruences(h.hom, df.fs.cf, dg.fs.cf);
  PervinMap pth = pt_map(h, dg.pt, df.pt);
  PervinMap pthbar = pt_map(FrithHom{df.fs.obj, dg.fs.obj, hbar}, dg.pt_sym, df.pt_sym);
  for (std::size_t i = 0; i < dg.pt.space->size(); ++i)
    if (df.alpha(pth(i)) != pthbar(dg.alpha(i))) return false;
  return true;
}

}  // namespace pfw
