#include "pfw/pervin.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pfw/error.hpp"

namespace pfw {

namespace {

void sort_family(std::vector<Subset>& f) {
  std::sort(f.begin(), f.end(), [](Subset a, Subset b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  f.erase(std::unique(f.begin(), f.end()), f.end());
}

std::vector<std::string> default_points(std::size_t n) {
  std::vector<std::string> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back("x" + std::to_string(i));
  return p;
}

// Closure of a family under binary union and intersection (and complements
// relative to `all` when asked).
std::vector<Subset> close_family(std::vector<Subset> f, Subset all, bool complements) {
  std::unordered_set<Subset> seen(f.begin(), f.end());
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Subset> fresh;
    if (complements) fresh.push_back(all & ~f[i]);
    for (std::size_t j = 0; j <= i; ++j) {
      fresh.push_back(f[i] | f[j]);
      fresh.push_back(f[i] & f[j]);
    }
    for (Subset s : fresh)
      if (seen.insert(s).second) f.push_back(s);
  }
  sort_family(f);
  return f;
}

}  // namespace

PervinSpace::PervinSpace(std::vector<std::string> points, std::vector<Subset> lattice)
    : points_(std::move(points)), lattice_(std::move(lattice)) {
  std::size_t cap = caps().max_universe;
  if (points_.size() > cap || points_.size() > 31) throw CapExceeded("max_universe", cap, points_.size());
  {
    auto sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("pervin: duplicate point name");
  }
  for (Subset s : lattice_)
    if ((s & ~all()) != 0) throw InvalidInput("pervin: lattice member outside the universe");
  sort_family(lattice_);
  if (!contains(0)) throw InvalidInput("pervin: lattice must contain the empty set");
  if (!contains(all())) throw InvalidInput("pervin: lattice must contain the universe");
  for (Subset a : lattice_)
    for (Subset b : lattice_)
      if (!contains(a | b) || !contains(a & b))
        throw InvalidInput("pervin: lattice not closed under union and intersection at " + set_name(a) + ", " +
                           set_name(b));
}

bool PervinSpace::contains(Subset s) const {
  return std::binary_search(lattice_.begin(), lattice_.end(), s, [](Subset a, Subset b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
}

std::string PervinSpace::set_name(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i)
    if ((s >> i) & 1U) {
      if (!first) out += ",";
      out += points_[i];
      first = false;
    }
  return out + "}";
}

PervinPtr make_pervin(std::vector<std::string> points, std::vector<Subset> lattice) {
  return std::make_shared<PervinSpace const>(std::move(points), std::move(lattice));
}

PervinPtr make_pervin(std::size_t n, std::vector<Subset> lattice) {
  return make_pervin(default_points(n), std::move(lattice));
}

PervinPtr discrete_pervin(std::size_t n) {
  std::vector<Subset> l;
  for (Subset s = 0; s < (Subset{1} << n); ++s) l.push_back(s);
  return make_pervin(n, l);
}

PervinPtr indiscrete_pervin(std::size_t n) {
  return make_pervin(n, {0, n == 0 ? Subset{0} : static_cast<Subset>((std::uint64_t{1} << n) - 1)});
}

Subset PervinMap::preimage(Subset t) const {
  Subset out = 0;
  for (std::size_t x = 0; x < map.size(); ++x)
    if ((t >> map[x]) & 1U) out |= Subset{1} << x;
  return out;
}

Subset PervinMap::image(Subset s) const {
  Subset out = 0;
  for (std::size_t x = 0; x < map.size(); ++x)
    if ((s >> x) & 1U) out |= Subset{1} << map[x];
  return out;
}

bool is_pervin_map(PervinMap const& f) {
  if (f.map.size() != f.dom->size()) return false;
  for (std::size_t y : f.map)
    if (y >= f.cod->size()) return false;
  for (Subset t : f.cod->lattice())
    if (!f.dom->contains(f.preimage(t))) return false;
  return true;
}

PervinMap identity_map(PervinPtr const& x) {
  PervinMap f{x, x, std::vector<std::size_t>(x->size())};
  for (std::size_t i = 0; i < x->size(); ++i) f.map[i] = i;
  return f;
}

PervinMap compose(PervinMap const& g, PervinMap const& f) {
  if (f.cod->size() != g.dom->size()) throw PreconditionError("compose: codomain/domain mismatch");
  PervinMap h{f.dom, g.cod, std::vector<std::size_t>(f.dom->size())};
  for (std::size_t x = 0; x < f.dom->size(); ++x) h.map[x] = g(f(x));
  return h;
}

std::vector<PervinMap> enumerate_pervin_maps(PervinPtr const& x, PervinPtr const& y) {
  std::vector<PervinMap> out;
  std::size_t n = x->size();
  std::size_t m = y->size();
  if (n > 0 && m == 0) return out;
  PervinMap f{x, y, std::vector<std::size_t>(n, 0)};
  while (true) {
    if (is_pervin_map(f)) out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f.map[i] == m) f.map[i++] = 0;
    if (i == n) break;
  }
  return out;
}

Element OmegaFrame::of(PervinSpace const& x, Subset s) const {
  auto const& l = x.lattice();
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] == s) return element[i];
  throw PreconditionError("omega: " + x.set_name(s) + " is not open");
}

OmegaFrame omega_topology(PervinPtr const& x) {
  auto const& lat = x->lattice();
  // Unions of finite intersections; on a finite universe this is the lattice.
  if (close_family(lat, x->all(), false) != lat) throw Error("omega: generated topology differs from the lattice");
  std::size_t n = lat.size();
  std::unordered_map<Subset, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(lat[i], i);
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n)), join = meet;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(x->set_name(lat[i]));
    for (std::size_t j = 0; j < n; ++j) {
      meet[i][j] = pos.at(lat[i] & lat[j]);
      join[i][j] = pos.at(lat[i] | lat[j]);
    }
  }
  TableFrame tf = frame_from_table(names, meet, join);
  return {tf.frame, tf.renaming};
}

bool is_t0(PervinSpace const& x) {
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      bool sep = false;
      for (Subset s : x.lattice())
        if (((s >> a) & 1U) != ((s >> b) & 1U)) sep = true;
      if (!sep) return false;
    }
  return true;
}

PervinMorphismReport morphism_predicates(PervinMap const& f) {
  if (!is_pervin_map(f)) throw PreconditionError("morphism_predicates: not a Pervin map");
  PervinMorphismReport r;
  std::vector<bool> hit(f.cod->size(), false);
  r.is_injective = true;
  for (std::size_t y : f.map) {
    if (hit[y]) r.is_injective = false;
    hit[y] = true;
  }
  r.is_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  r.is_mono = r.is_injective;
  r.is_epi = r.is_surjective;
  bool initial = true;
  for (Subset s : f.dom->lattice()) {
    bool found = false;
    for (Subset t : f.cod->lattice())
      if (f.preimage(t) == s) found = true;
    if (!found) initial = false;
  }
  r.is_extremal_mono = r.is_injective && initial;
  r.is_iso = r.is_injective && r.is_surjective && initial;
  r.dom_t0 = is_t0(*f.dom);
  r.cod_t0 = is_t0(*f.cod);
  return r;
}

PervinPtr psym(PervinPtr const& x) {
  return make_pervin(x->points(), close_family(x->lattice(), x->all(), true));
}

bool is_symmetric(PervinSpace const& x) {
  for (Subset s : x.lattice())
    if (!x.contains(x.all() & ~s)) return false;
  return true;
}

Skula skula(PervinPtr const& x) {
  Skula k;
  k.topology = psym(x)->lattice();
  k.is_discrete = true;
  for (std::size_t i = 0; i < x->size(); ++i)
    if (!std::binary_search(k.topology.begin(), k.topology.end(), Subset{1} << i, [](Subset a, Subset b) {
          int pa = std::popcount(a), pb = std::popcount(b);
          return pa != pb ? pa < pb : a < b;
        }))
      k.is_discrete = false;
  return k;
}

Subspace subspace(PervinPtr const& x, Subset y) {
  if ((y & ~x->all()) != 0) throw InvalidInput("subspace: subset outside the universe");
  std::vector<std::string> pts;
  std::vector<std::size_t> incl;
  for (std::size_t i = 0; i < x->size(); ++i)
    if ((y >> i) & 1U) {
      pts.push_back(x->points()[i]);
      incl.push_back(i);
    }
  std::vector<Subset> lat;
  for (Subset s : x->lattice()) {
    Subset r = 0;
    for (std::size_t k = 0; k < incl.size(); ++k)
      if ((s >> incl[k]) & 1U) r |= Subset{1} << k;
    lat.push_back(r);
  }
  PervinPtr sp = make_pervin(pts, lat);
  PervinMap inc{sp, x, incl};
  if (!morphism_predicates(inc).is_extremal_mono) throw Error("subspace: inclusion is not an extremal mono");
  return {sp, inc};
}

bool equalizer_reproduces(PervinMap const& m) {
  PervinPtr z = indiscrete_pervin(2);
  std::size_t ny = m.cod->size();
  PervinMap f1{m.cod, z, std::vector<std::size_t>(ny, 1)};
  PervinMap f2{m.cod, z, std::vector<std::size_t>(ny, 0)};
  Subset img = m.image(m.dom->all());
  for (std::size_t y = 0; y < ny; ++y)
    if ((img >> y) & 1U) f2.map[y] = 1;
  if (!is_pervin_map(f1) || !is_pervin_map(f2)) return false;
  Subset agree = 0;
  for (std::size_t y = 0; y < ny; ++y)
    if (f1(y) == f2(y)) agree |= Subset{1} << y;
  // The equalizer is the subspace on the agreement set; m must corestrict to
  // an iso onto it.
  Subspace eq = subspace(m.cod, agree);
  if (eq.space->size() != m.dom->size()) return false;
  std::vector<std::size_t> to_eq(m.dom->size());
  for (std::size_t x = 0; x < m.dom->size(); ++x) {
    auto it = std::find(eq.inclusion.map.begin(), eq.inclusion.map.end(), m(x));
    if (it == eq.inclusion.map.end()) return false;
    to_eq[x] = static_cast<std::size_t>(it - eq.inclusion.map.begin());
  }
  PervinMap k{m.dom, eq.space, to_eq};
  return is_pervin_map(k) && morphism_predicates(k).is_iso;
}

Congruence theta_Y(PervinPtr const& x, OmegaFrame const& omega, Subset y) {
  std::vector<std::pair<Element, Element>> pairs;
  auto const& lat = x->lattice();
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j)
      if ((lat[i] & y) == (lat[j] & y)) pairs.emplace_back(omega.element[i], omega.element[j]);
  return congruence_generated(omega.frame, pairs);
}

TdReport td_suite(PervinPtr const& x) {
  TdReport r;
  std::size_t n = x->size();
  r.pervin_td = true;
  for (std::size_t p = 0; p < n; ++p) {
    Subset bit = Subset{1} << p;
    bool witness = false;
    for (Subset s : x->lattice())
      if ((s & bit) && x->contains(s & ~bit)) witness = true;
    if (!witness) r.pervin_td = false;
  }
  OmegaFrame omega = omega_topology(x);
  std::set<std::vector<Element>> seen;
  r.theta_injective = true;
  for (Subset y = 0; y <= x->all(); ++y) {
    if (!seen.insert(theta_Y(x, omega, y).labels()).second) r.theta_injective = false;
    if (y == x->all()) break;
  }
  r.no_trivial_point = true;
  for (std::size_t p = 0; p < n; ++p)
    if (theta_Y(x, omega, x->all() & ~(Subset{1} << p)).is_identity()) r.no_trivial_point = false;
  r.skula_discrete = skula(x).is_discrete;
  return r;
}

PervinOracle::PervinOracle(std::vector<PervinPtr> catalog) : catalog_(std::move(catalog)) {}

std::vector<PervinMap> const& PervinOracle::maps(PervinPtr const& x, PervinPtr const& y) {
  auto key = std::make_pair(x.get(), y.get());
  auto it = maps_.find(key);
  if (it == maps_.end()) it = maps_.emplace(key, enumerate_pervin_maps(x, y)).first;
  return it->second;
}

bool PervinOracle::is_epi(PervinMap const& f) {
  auto key = std::make_pair(std::make_pair(f.dom.get(), f.cod.get()), f.map);
  auto it = epi_.find(key);
  if (it != epi_.end()) return it->second;
  bool epi = true;
  for (auto const& z : catalog_) {
    std::set<std::vector<std::size_t>> restrictions;
    auto const& gs = maps(f.cod, z);
    for (auto const& g : gs)
      if (!restrictions.insert(compose(g, f).map).second) {
        epi = false;
        break;
      }
    if (!epi) break;
  }
  epi_.emplace(key, epi);
  return epi;
}

bool PervinOracle::is_mono(PervinMap const& f) {
  for (auto const& z : catalog_) {
    std::set<std::vector<std::size_t>> composites;
    for (auto const& g : maps(z, f.dom))
      if (!composites.insert(compose(f, g).map).second) return false;
  }
  return true;
}

bool PervinOracle::is_iso(PervinMap const& f) {
  for (auto const& g : maps(f.cod, f.dom))
    if (compose(g, f) == identity_map(f.dom) && compose(f, g) == identity_map(f.cod)) return true;
  return false;
}

bool PervinOracle::is_extremal_mono(PervinMap const& m) {
  if (!is_mono(m)) return false;
  for (auto const& z : catalog_) {
    if (z->size() > m.dom->size()) continue;
    for (auto const& e : maps(m.dom, z)) {
      bool factors = false;
      for (auto const& g : maps(z, m.cod))
        if (compose(g, e).map == m.map) {
          factors = true;
          break;
        }
      if (factors && is_epi(e) && !is_iso(e)) return false;
    }
  }
  return true;
}

}  // namespace pfw
