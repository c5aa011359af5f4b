#include "pfw/hom.hpp"

#include <algorithm>

#include "pfw/error.hpp"

namespace pfw {

HomReport hom_validate(FrameHom const& h) {
  HomReport r;
  auto const& d = *h.dom;
  auto const& c = *h.cod;
  if (h.map.size() != d.size()) {
    r.witness = "map is not total on the domain";
    return r;
  }
  for (Element x : h.map)
    if (x >= c.size()) {
      r.witness = "map value outside the codomain";
      return r;
    }
  r.is_frame_hom = true;
  if (h(d.bottom()) != c.bottom()) {
    r.is_frame_hom = false;
    r.witness = "0 not preserved";
  } else if (h(d.top()) != c.top()) {
    r.is_frame_hom = false;
    r.witness = "1 not preserved";
  }
  for (Element a = 0; a < d.size() && r.is_frame_hom; ++a)
    for (Element b = a + 1; b < d.size() && r.is_frame_hom; ++b) {
      if (h(d.meet(a, b)) != c.meet(h(a), h(b))) {
        r.is_frame_hom = false;
        r.witness = "meet of " + d.name(a) + " and " + d.name(b) + " not preserved";
      } else if (h(d.join(a, b)) != c.join(h(a), h(b))) {
        r.is_frame_hom = false;
        r.witness = "join of " + d.name(a) + " and " + d.name(b) + " not preserved";
      }
    }
  std::vector<bool> hit(c.size(), false);
  r.is_injective = true;
  for (Element a = 0; a < d.size(); ++a) {
    if (hit[h(a)]) r.is_injective = false;
    hit[h(a)] = true;
  }
  r.is_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  r.is_dense = true;
  for (Element a = 0; a < d.size(); ++a)
    if (h(a) == c.bottom() && a != d.bottom()) r.is_dense = false;
  for (Element e = 0; e < c.size(); ++e)
    if (hit[e]) r.image.push_back(e);
  return r;
}

bool is_frame_hom(FrameHom const& h) { return hom_validate(h).is_frame_hom; }

FrameHom identity_hom(FramePtr const& l) {
  FrameHom h{l, l, std::vector<Element>(l->size())};
  for (Element e = 0; e < l->size(); ++e) h.map[e] = e;
  return h;
}

FrameHom compose(FrameHom const& g, FrameHom const& f) {
  if (f.cod->size() != g.dom->size()) throw PreconditionError("compose: codomain/domain mismatch");
  FrameHom h{f.dom, g.cod, std::vector<Element>(f.dom->size())};
  for (Element e = 0; e < f.dom->size(); ++e) h.map[e] = g(f(e));
  return h;
}

FrameHom hom_from_ji_images(FramePtr const& dom, FramePtr const& cod, std::vector<Element> const& ji_images) {
  auto const& d = *dom;
  auto const& c = *cod;
  FrameHom h{dom, cod, std::vector<Element>(d.size())};
  for (Element e = 0; e < d.size(); ++e) {
    Mask m = 0;
    Mask em = d.mask(e);
    for (std::size_t pt = 0; pt < d.jir().size(); ++pt)
      if ((em >> pt) & 1U) m |= c.mask(ji_images[pt]);
    h.map[e] = c.at(m);
  }
  return h;
}

std::optional<FrameHom> find_isomorphism(FramePtr const& a, FramePtr const& b) {
  if (a->size() != b->size()) return std::nullopt;
  auto perm = find_poset_isomorphism(a->jir(), b->jir());
  if (!perm) return std::nullopt;
  FrameHom h{a, b, std::vector<Element>(a->size())};
  for (Element e = 0; e < a->size(); ++e) {
    Mask m = 0;
    for (std::size_t pt = 0; pt < a->jir().size(); ++pt)
      if ((a->mask(e) >> pt) & 1U) m |= Mask{1} << (*perm)[pt];
    h.map[e] = b->at(m);
  }
  return h;
}

bool isomorphic(FramePtr const& a, FramePtr const& b) { return find_isomorphism(a, b).has_value(); }

namespace {

std::vector<FrameHom> enumerate_impl(FramePtr const& dom, FramePtr const& cod, Sublattice const* s,
                                     Sublattice const* t) {
  auto const& d = *dom;
  auto const& c = *cod;
  std::size_t n = d.jir().size();
  std::vector<std::size_t> order = d.jir().linear_extension();
  std::vector<Element> img(n, 0);
  std::vector<bool> assigned(n, false);
  std::vector<FrameHom> out;
  // Image of an element whose join-irreducibles are all assigned.
  auto image_of = [&](Element e) {
    Mask m = 0;
    Mask em = d.mask(e);
    for (std::size_t pt = 0; pt < n; ++pt)
      if ((em >> pt) & 1U) m |= c.mask(img[pt]);
    return c.at(m);
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      FrameHom h = hom_from_ji_images(dom, cod, img);
      if (h(d.top()) != c.top()) return;
      if (s != nullptr)
        for (Element x : s->members())
          if (!t->contains(h(x))) return;
      out.push_back(std::move(h));
      return;
    }
    std::size_t p = order[k];
    for (Element y = 0; y < c.size(); ++y) {
      bool ok = true;
      // Monotone on join-irreducibles.
      for (std::size_t kk = 0; kk < k && ok; ++kk) {
        std::size_t q = order[kk];
        if (d.jir().le(q, p) && !c.leq(img[q], y)) ok = false;
      }
      if (!ok) continue;
      img[p] = y;
      assigned[p] = true;
      // h(p ∧ q) = h(p) ∧ h(q) for earlier q; everything below p ∧ q is
      // already assigned because it lies below q.
      for (std::size_t kk = 0; kk < k && ok; ++kk) {
        std::size_t q = order[kk];
        Element pq = d.meet(d.ji(p), d.ji(q));
        Mask below = d.mask(pq);
        bool ready = true;
        for (std::size_t r = 0; r < n; ++r)
          if (((below >> r) & 1U) && !assigned[r]) ready = false;
        if (!ready) continue;
        if (image_of(pq) != c.meet(y, img[q])) ok = false;
      }
      if (ok) self(self, k + 1);
      assigned[p] = false;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<FrameHom> enumerate_homs(FramePtr const& dom, FramePtr const& cod) {
  return enumerate_impl(dom, cod, nullptr, nullptr);
}

std::vector<FrameHom> enumerate_homs_preserving(Sublattice const& s, Sublattice const& t) {
  return enumerate_impl(s.parent(), t.parent(), &s, &t);
}

std::vector<Element> kernel_labels(FrameHom const& h) {
  std::vector<Element> first(h.cod->size(), static_cast<Element>(-1));
  std::vector<Element> lab(h.dom->size());
  for (Element a = 0; a < h.dom->size(); ++a) {
    Element y = h(a);
    if (first[y] == static_cast<Element>(-1)) first[y] = a;
    lab[a] = first[y];
  }
  return lab;
}

}  // namespace pfw
