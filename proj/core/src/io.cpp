#include "pfw/io.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace pfw {

SchemaError::SchemaError(std::string path, std::string const& message)
    : InvalidInput(path + ": " + message), path_(std::move(path)) {}

namespace {

std::string at(std::string const& path, std::string const& key) { return path + "." + key; }
std::string at(std::string const& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void need(bool ok, std::string const& path, std::string const& message) {
  if (!ok) throw SchemaError(path, message);
}

json const& field(json const& j, std::string const& key, std::string const& path) {
  need(j.is_object(), path, "expected an object");
  auto it = j.find(key);
  need(it != j.end(), at(path, key), "missing");
  return *it;
}

std::string str(json const& j, std::string const& path) {
  need(j.is_string(), path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> unique_names(json const& j, std::string const& path) {
  need(j.is_array(), path, "expected an array of names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(str(j[i], at(path, i)));
    need(seen.insert(out.back()).second, at(path, i), "duplicate name " + out.back());
  }
  return out;
}

// Runs f and re-throws library validation errors at `path`.
template <class F>
auto guarded(std::string const& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (SchemaError const&) {
    throw;
  } catch (CapExceeded const&) {
    throw;
  } catch (InvalidInput const& e) {
    throw SchemaError(path, e.what());
  } catch (PreconditionError const& e) {
    throw SchemaError(path, e.what());
  }
}

Element element(FiniteFrame const& l, json const& j, std::string const& path) {
  std::string n = str(j, path);
  auto e = l.find(n);
  need(e.has_value(), path, "unknown element " + n);
  return *e;
}

FramePtr poset_frame(json const& j, std::string const& path) {
  auto points = unique_names(field(j, "points", path), at(path, "points"));
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("le")) {
    json const& le = j["le"];
    std::string lp = at(path, "le");
    need(le.is_array(), lp, "expected an array of pairs");
    for (std::size_t i = 0; i < le.size(); ++i) {
      std::string pp = at(lp, i);
      need(le[i].is_array() && le[i].size() == 2, pp, "expected a pair [lower, upper]");
      std::size_t ends[2];
      for (std::size_t k = 0; k < 2; ++k) {
        std::string n = str(le[i][k], at(pp, k));
        auto it = index.find(n);
        need(it != index.end(), at(pp, k), "unknown point " + n);
        ends[k] = it->second;
      }
      if (ends[0] != ends[1]) pairs.emplace_back(ends[0], ends[1]);
    }
  }
  Poset p = guarded(at(path, "le"), [&] { return Poset::from_covers(points.size(), pairs, points); });
  std::vector<std::string> names;
  if (j.contains("names")) names = unique_names(j["names"], at(path, "names"));
  return guarded(at(path, "names"), [&] { return frame_from_poset(p, names); });
}

FramePtr table_frame(json const& j, std::string const& path) {
  auto elements = unique_names(field(j, "elements", path), at(path, "elements"));
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
  auto table = [&](char const* key) {
    std::string tp = at(path, key);
    json const& t = field(j, key, path);
    need(t.is_array() && t.size() == elements.size(), tp, "expected one row per element");
    std::vector<std::vector<std::size_t>> out(elements.size());
    for (std::size_t r = 0; r < t.size(); ++r) {
      std::string rp = at(tp, r);
      need(t[r].is_array() && t[r].size() == elements.size(), rp, "expected one entry per element");
      for (std::size_t c = 0; c < t[r].size(); ++c) {
        json const& v = t[r][c];
        std::string cp = at(rp, c);
        if (v.is_number_integer()) {
          need(v.get<std::int64_t>() >= 0 && v.get<std::size_t>() < elements.size(), cp, "index out of range");
          out[r].push_back(v.get<std::size_t>());
        } else {
          std::string n = str(v, cp);
          auto it = index.find(n);
          need(it != index.end(), cp, "unknown element " + n);
          out[r].push_back(it->second);
        }
      }
    }
    return out;
  };
  auto meet = table("meet");
  auto join = table("join");
  return guarded(path, [&] { return frame_from_table(elements, meet, join).frame; });
}

std::vector<Element> element_list(FiniteFrame const& l, json const& j, std::string const& path) {
  need(j.is_array(), path, "expected an array of element names");
  std::vector<Element> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element(l, j[i], at(path, i)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json names_of(FiniteFrame const& l, std::vector<Element> const& es) {
  json out = json::array();
  for (Element e : es) out.push_back(l.name(e));
  return out;
}

enum class ObjectKind { frame, frith, pervin };

ObjectKind object_kind(json const& j) {
  if (j.is_object() && j.contains("universe")) return ObjectKind::pervin;
  if (j.is_object() && j.contains("frame") && j.contains("s")) return ObjectKind::frith;
  return ObjectKind::frame;
}

InstanceKind detect(json const& j) {
  need(j.is_object(), "$", "expected an object");
  if (j.contains("universe")) return InstanceKind::pervin;
  if (j.contains("dom") && j.contains("cod") && j.contains("map")) return InstanceKind::morphism;
  if (j.contains("frame") && (j.contains("r") || j.contains("basis"))) return InstanceKind::quni;
  if (j.contains("frame") && j.contains("s")) return InstanceKind::frith;
  if (j.contains("points") || j.contains("elements")) return InstanceKind::frame;
  throw SchemaError("$", "cannot tell the instance kind from the keys");
}

json canonical(InstanceKind k, json const& payload, std::string const& path) {
  switch (k) {
    case InstanceKind::frame: return frame_to_json(*frame_from_json(payload, path));
    case InstanceKind::frith: return frith_to_json(frith_from_json(payload, path));
    case InstanceKind::pervin: return pervin_to_json(*pervin_from_json(payload, path));
    case InstanceKind::quni: return quni_to_json(quni_from_json(payload, path));
    case InstanceKind::morphism: return morphism_to_json(morphism_from_json(payload, path));
  }
  throw Error("unreachable");
}

}  // namespace

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::frame: return "frame";
    case InstanceKind::frith: return "frith";
    case InstanceKind::pervin: return "pervin";
    case InstanceKind::quni: return "quni";
    case InstanceKind::morphism: return "morphism";
  }
  return "?";
}

std::optional<InstanceKind> instance_kind(std::string const& name) {
  for (auto k : {InstanceKind::frame, InstanceKind::frith, InstanceKind::pervin, InstanceKind::quni,
                 InstanceKind::morphism})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

Instance parse_instance(json const& doc, std::string const& default_name) {
  Instance out;
  out.name = default_name;
  if (doc.is_object() && doc.contains("payload")) {
    std::string kind = str(field(doc, "kind", "$"), "$.kind");
    auto k = instance_kind(kind);
    need(k.has_value(), "$.kind", "unknown kind " + kind);
    out.kind = *k;
    if (doc.contains("name")) out.name = str(doc["name"], "$.name");
    out.payload = canonical(out.kind, doc["payload"], "$.payload");
  } else {
    out.kind = detect(doc);
    out.payload = canonical(out.kind, doc, "$");
  }
  return out;
}

json serialize(Instance const& inst) {
  return json{{"kind", to_string(inst.kind)}, {"name", inst.name}, {"payload", inst.payload}};
}

FramePtr frame_from_json(json const& j, std::string const& path) {
  need(j.is_object(), path, "expected a frame object");
  std::string kind = j.contains("kind") ? str(j["kind"], at(path, "kind")) : "poset";
  if (kind == "poset") return poset_frame(j, path);
  if (kind == "table") return table_frame(j, path);
  throw SchemaError(at(path, "kind"), "expected \"poset\" or \"table\"");
}

json frame_to_json(FiniteFrame const& l) {
  auto const& p = l.jir();
  json le = json::array();
  for (auto [a, b] : p.covers()) le.push_back({p.name(a), p.name(b)});
  return json{{"kind", "poset"}, {"points", p.names()}, {"le", le}, {"names", l.names()}};
}

FrithFrame frith_from_json(json const& j, std::string const& path) {
  FramePtr l = frame_from_json(field(j, "frame", path), at(path, "frame"));
  std::string sp = at(path, "s");
  auto members = element_list(*l, field(j, "s", path), sp);
  return guarded(sp, [&] { return make_frith(Sublattice(l, members)); });
}

json frith_to_json(FrithFrame const& f) {
  return json{{"frame", frame_to_json(*f.frame)}, {"s", names_of(*f.frame, f.s.members())}};
}

PervinPtr pervin_from_json(json const& j, std::string const& path) {
  auto universe = unique_names(field(j, "universe", path), at(path, "universe"));
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i) index[universe[i]] = i;
  std::string lp = at(path, "lattice");
  json const& lat = field(j, "lattice", path);
  need(lat.is_array(), lp, "expected an array of subsets");
  std::vector<Subset> family;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::string sp = at(lp, i);
    need(lat[i].is_array(), sp, "expected an array of point names");
    Subset s = 0;
    for (std::size_t k = 0; k < lat[i].size(); ++k) {
      std::string n = str(lat[i][k], at(sp, k));
      auto it = index.find(n);
      need(it != index.end(), at(sp, k), "unknown point " + n);
      s |= Subset{1} << it->second;
    }
    family.push_back(s);
  }
  return guarded(lp, [&] { return make_pervin(universe, family); });
}

json subset_to_json(PervinSpace const& x, Subset s) {
  json out = json::array();
  for (std::size_t i = 0; i < x.size(); ++i)
    if ((s >> i) & 1U) out.push_back(x.points()[i]);
  return out;
}

json pervin_to_json(PervinSpace const& x) {
  json lat = json::array();
  for (Subset s : x.lattice()) lat.push_back(subset_to_json(x, s));
  return json{{"universe", x.points()}, {"lattice", lat}};
}

QuniDoc quni_from_json(json const& j, std::string const& path) {
  FramePtr l = frame_from_json(field(j, "frame", path), at(path, "frame"));
  if (j.contains("r")) {
    std::string rp = at(path, "r");
    auto r = element_list(*l, j["r"], rp);
    return guarded(rp, [&] { return QuniDoc{filter_from_sublattice(l, r), r}; });
  }
  std::string bp = at(path, "basis");
  json const& basis = field(j, "basis", path);
  need(basis.is_array() && !basis.empty(), bp, "expected a nonempty array of entourages");
  QuniDoc out{{l, {}}, std::nullopt};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::string ep = at(bp, i);
    need(basis[i].is_array(), ep, "expected an array of pairs");
    std::vector<std::pair<Element, Element>> seed;
    for (std::size_t k = 0; k < basis[i].size(); ++k) {
      std::string pp = at(ep, k);
      need(basis[i][k].is_array() && basis[i][k].size() == 2, pp, "expected a pair [x, y]");
      seed.emplace_back(element(*l, basis[i][k][0], at(pp, 0)), element(*l, basis[i][k][1], at(pp, 1)));
    }
    out.q.basis.push_back(guarded(ep, [&] { return cideal_generated(l, seed); }));
  }
  return out;
}

json quni_to_json(QuniDoc const& q) {
  json out{{"frame", frame_to_json(*q.q.frame)}};
  if (q.r) {
    out["r"] = names_of(*q.q.frame, *q.r);
  } else {
    json basis = json::array();
    for (auto const& e : q.q.basis) basis.push_back(cideal_to_json(e));
    out["basis"] = basis;
  }
  return out;
}

Morphism morphism_from_json(json const& j, std::string const& path) {
  json const& dj = field(j, "dom", path);
  json const& cj = field(j, "cod", path);
  json const& mj = field(j, "map", path);
  std::string mp = at(path, "map");
  need(mj.is_object(), mp, "expected an object from names to names");
  ObjectKind k = object_kind(dj);
  need(object_kind(cj) == k, at(path, "cod"), "domain and codomain are of different kinds");

  auto lookup = [&](std::vector<std::string> const& dom_names, auto&& image_of) {
    for (auto it = mj.begin(); it != mj.end(); ++it)
      need(std::find(dom_names.begin(), dom_names.end(), it.key()) != dom_names.end(), at(mp, it.key()),
           "unknown domain name");
    for (auto const& n : dom_names) {
      need(mj.contains(n), mp, "missing image of " + n);
      image_of(n, mj[n], at(mp, n));
    }
  };

  if (k == ObjectKind::pervin) {
    PervinPtr x = pervin_from_json(dj, at(path, "dom"));
    PervinPtr y = pervin_from_json(cj, at(path, "cod"));
    PervinMap f{x, y, {}};
    lookup(x->points(), [&](std::string const&, json const& v, std::string const& p) {
      std::string n = str(v, p);
      auto it = std::find(y->points().begin(), y->points().end(), n);
      need(it != y->points().end(), p, "unknown point " + n);
      f.map.push_back(static_cast<std::size_t>(it - y->points().begin()));
    });
    need(is_pervin_map(f), mp, "preimage of a lattice member is not in the lattice");
    return f;
  }

  FrithFrame dom, cod;
  if (k == ObjectKind::frith) {
    dom = frith_from_json(dj, at(path, "dom"));
    cod = frith_from_json(cj, at(path, "cod"));
  } else {
    dom = make_frith(frame_from_json(dj, at(path, "dom")));
    cod = make_frith(frame_from_json(cj, at(path, "cod")));
  }
  FrameHom h{dom.frame, cod.frame, {}};
  lookup(dom.frame->names(), [&](std::string const&, json const& v, std::string const& p) {
    h.map.push_back(element(*cod.frame, v, p));
  });
  HomReport rep = hom_validate(h);
  need(rep.is_frame_hom, mp, "not a frame homomorphism: " + rep.witness);
  if (k == ObjectKind::frame) return h;
  return guarded(mp, [&] { return make_frith_hom(dom, cod, h); });
}

json morphism_to_json(Morphism const& m) {
  if (auto const* f = std::get_if<PervinMap>(&m)) {
    json map = json::object();
    for (std::size_t i = 0; i < f->dom->size(); ++i) map[f->dom->points()[i]] = f->cod->points()[(*f)(i)];
    return json{{"dom", pervin_to_json(*f->dom)}, {"cod", pervin_to_json(*f->cod)}, {"map", map}};
  }
  auto encode = [](FrameHom const& h, json dom, json cod) {
    json map = json::object();
    for (Element a = 0; a < h.dom->size(); ++a) map[h.dom->name(a)] = h.cod->name(h(a));
    return json{{"dom", std::move(dom)}, {"cod", std::move(cod)}, {"map", map}};
  };
  if (auto const* h = std::get_if<FrithHom>(&m)) return encode(h->hom, frith_to_json(h->dom), frith_to_json(h->cod));
  auto const& h = std::get<FrameHom>(m);
  return encode(h, frame_to_json(*h.dom), frame_to_json(*h.cod));
}

json cideal_to_json(CIdeal const& e) {
  // Pairs with a 0 coordinate belong to every C-ideal and are left out.
  json out = json::array();
  for (auto [x, y] : e.pairs())
    if (x != e.left()->bottom() && y != e.right()->bottom())
      out.push_back({e.left()->name(x), e.right()->name(y)});
  return out;
}

json congruence_to_json(Congruence const& c) {
  json out = json::array();
  for (auto const& b : c.blocks()) out.push_back(names_of(*c.frame(), b));
  return out;
}

FramePtr as_frame(Instance const& i) { return frame_from_json(i.payload); }
FrithFrame as_frith(Instance const& i) {
  if (i.kind == InstanceKind::frame) return make_frith(frame_from_json(i.payload));
  return frith_from_json(i.payload);
}
PervinPtr as_pervin(Instance const& i) { return pervin_from_json(i.payload); }
QuniDoc as_quni(Instance const& i) { return quni_from_json(i.payload); }
Morphism as_morphism(Instance const& i) { return morphism_from_json(i.payload); }

Instance make_instance(std::string name, FiniteFrame const& l) {
  return {InstanceKind::frame, std::move(name), frame_to_json(l)};
}
Instance make_instance(std::string name, FrithFrame const& f) {
  return {InstanceKind::frith, std::move(name), frith_to_json(f)};
}
Instance make_instance(std::string name, PervinSpace const& x) {
  return {InstanceKind::pervin, std::move(name), pervin_to_json(x)};
}
Instance make_instance(std::string name, QuniDoc const& q) {
  return {InstanceKind::quni, std::move(name), quni_to_json(q)};
}
Instance make_instance(std::string name, Morphism const& m) {
  return {InstanceKind::morphism, std::move(name), morphism_to_json(m)};
}

}  // namespace pfw
