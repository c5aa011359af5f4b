#include "pfw/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "pfw/error.hpp"

namespace pfw {

std::vector<Mask> enumerate_down_sets(Poset const& p, std::size_t cap) {
  std::vector<std::size_t> order = p.linear_extension();
  std::vector<Mask> out;
  auto rec = [&](auto&& self, std::size_t k, Mask cur) -> void {
    if (k == order.size()) {
      if (out.size() >= cap) throw CapExceeded("max_elements", cap, out.size() + 1);
      out.push_back(cur);
      return;
    }
    std::size_t pt = order[k];
    self(self, k + 1, cur);
    Mask below = p.down(pt) & ~(Mask{1} << pt);
    if ((below & ~cur) == 0) self(self, k + 1, cur | (Mask{1} << pt));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

FiniteFrame::FiniteFrame(Poset jir, std::vector<std::string> element_names) : jir_(std::move(jir)) {
  Caps c = caps();
  if (jir_.size() > c.max_ji) throw CapExceeded("max_ji", c.max_ji, jir_.size());
  masks_ = enumerate_down_sets(jir_, c.max_elements);
  index_.reserve(masks_.size() * 2);
  for (std::size_t i = 0; i < masks_.size(); ++i) index_.emplace(masks_[i], static_cast<Element>(i));
  ji_.resize(jir_.size());
  for (std::size_t pt = 0; pt < jir_.size(); ++pt) ji_[pt] = index_.at(jir_.down(pt));

  if (!element_names.empty()) {
    if (element_names.size() != masks_.size())
      throw InvalidInput("frame: expected " + std::to_string(masks_.size()) + " element names, got " +
                         std::to_string(element_names.size()));
    names_ = std::move(element_names);
  } else {
    names_.resize(masks_.size());
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      if (i == 0) {
        names_[i] = "0";
      } else if (i + 1 == masks_.size()) {
        names_[i] = "1";
      } else {
        std::string nm;
        Mask m = masks_[i];
        for (std::size_t pt = 0; pt < jir_.size(); ++pt) {
          if (((m >> pt) & 1U) == 0) continue;
          if ((jir_.up(pt) & m) != (Mask{1} << pt)) continue;  // not maximal in m
          if (!nm.empty()) nm += "|";
          nm += jir_.name(pt);
        }
        names_[i] = nm;
      }
    }
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!by_name_.emplace(names_[i], static_cast<Element>(i)).second)
      throw InvalidInput("frame: duplicate element name '" + names_[i] + "'");
  }

  std::size_t n = masks_.size();
  if (n <= 512) {
    meet_table_.resize(n * n);
    join_table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Element m = index_.at(masks_[a] & masks_[b]);
        Element j = index_.at(masks_[a] | masks_[b]);
        meet_table_[a * n + b] = meet_table_[b * n + a] = m;
        join_table_[a * n + b] = join_table_[b * n + a] = j;
      }
  }
}

std::optional<Element> FiniteFrame::element_of(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element FiniteFrame::at(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw PreconditionError("frame: mask is not a down-set of the join-irreducibles");
  return it->second;
}

Element FiniteFrame::meet(Element a, Element b) const {
  if (!meet_table_.empty()) return meet_table_[a * size() + b];
  return index_.at(masks_[a] & masks_[b]);
}

Element FiniteFrame::join(Element a, Element b) const {
  if (!join_table_.empty()) return join_table_[a * size() + b];
  return index_.at(masks_[a] | masks_[b]);
}

Element FiniteFrame::pseudocomplement(Element a) const {
  Mask am = masks_[a];
  Mask r = 0;
  for (std::size_t pt = 0; pt < jir_.size(); ++pt)
    if ((jir_.down(pt) & am) == 0) r |= Mask{1} << pt;
  return index_.at(r);
}

std::optional<Element> FiniteFrame::complement(Element a) const {
  Element s = pseudocomplement(a);
  if (join(a, s) != top()) return std::nullopt;
  return s;
}

std::vector<Element> FiniteFrame::lower_covers(Element e) const {
  std::vector<Element> out;
  Mask m = masks_[e];
  for (std::size_t pt = 0; pt < jir_.size(); ++pt) {
    if (((m >> pt) & 1U) == 0) continue;
    if ((jir_.up(pt) & m) != (Mask{1} << pt)) continue;
    out.push_back(index_.at(m & ~(Mask{1} << pt)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Element, Element>> FiniteFrame::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element e = 0; e < size(); ++e)
    for (Element c : lower_covers(e)) out.emplace_back(c, e);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Element> FiniteFrame::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it != by_name_.end()) return it->second;
  if (name == "0") return bottom();
  if (name == "1") return top();
  return std::nullopt;
}

Element FiniteFrame::parse(std::string_view name) const {
  auto e = find(name);
  if (!e) throw InvalidInput("unknown element '" + std::string(name) + "'");
  return *e;
}

FramePtr frame_from_poset(Poset const& p, std::vector<std::string> element_names) {
  return std::make_shared<FiniteFrame const>(p, std::move(element_names));
}

TableFrame frame_from_table(std::vector<std::string> const& elements,
                            std::vector<std::vector<std::size_t>> const& meet,
                            std::vector<std::vector<std::size_t>> const& join) {
  std::size_t n = elements.size();
  if (n == 0) throw InvalidInput("table: no elements");
  if (meet.size() != n || join.size() != n) throw InvalidInput("table: tables must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (meet[i].size() != n || join[i].size() != n) throw InvalidInput("table: tables must be n x n");
    for (std::size_t j = 0; j < n; ++j)
      if (meet[i][j] >= n || join[i][j] >= n) throw InvalidInput("table: entry out of range");
  }
  auto const& nm = elements;
  auto fail = [&](std::string const& what, std::size_t a, std::size_t b, std::size_t c) {
    throw InvalidInput("table: " + what + " at (" + nm[a] + ", " + nm[b] + ", " + nm[c] + ")");
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (meet[a][a] != a || join[a][a] != a) fail("not idempotent", a, a, a);
    for (std::size_t b = 0; b < n; ++b) {
      if (meet[a][b] != meet[b][a] || join[a][b] != join[b][a]) fail("not commutative", a, b, b);
      if (meet[a][join[a][b]] != a || join[a][meet[a][b]] != a) fail("absorption fails", a, b, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (meet[meet[a][b]][c] != meet[a][meet[b][c]]) fail("meet not associative", a, b, c);
        if (join[join[a][b]][c] != join[a][join[b][c]]) fail("join not associative", a, b, c);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]])
          fail("not distributive: x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)", a, b, c);

  auto leq = [&](std::size_t a, std::size_t b) { return meet[a][b] == a; };
  std::size_t bot = 0;
  for (std::size_t a = 0; a < n; ++a)
    if (leq(a, bot)) bot = a;
  std::vector<std::size_t> jis;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == bot) continue;
    std::size_t lower = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (c == j || !leq(c, j)) continue;
      bool is_cover = true;
      for (std::size_t d = 0; d < n && is_cover; ++d)
        if (d != c && d != j && leq(c, d) && leq(d, j)) is_cover = false;
      if (is_cover) ++lower;
    }
    if (lower == 1) jis.push_back(j);
  }
  std::vector<std::pair<std::size_t, std::size_t>> le;
  std::vector<std::string> pnames;
  for (std::size_t i = 0; i < jis.size(); ++i) {
    pnames.push_back(nm[jis[i]]);
    for (std::size_t k = 0; k < jis.size(); ++k)
      if (i != k && leq(jis[i], jis[k])) le.emplace_back(i, k);
  }
  Poset p(jis.size(), le, pnames);
  std::vector<Mask> row_mask(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < jis.size(); ++i)
      if (leq(jis[i], a)) row_mask[a] |= Mask{1} << i;

  Caps c = caps();
  if (p.size() > c.max_ji) throw CapExceeded("max_ji", c.max_ji, p.size());
  std::vector<Mask> downs = enumerate_down_sets(p, c.max_elements);
  if (downs.size() != n) throw InvalidInput("table: lattice is not the down-set lattice of its join-irreducibles");
  std::unordered_map<Mask, std::size_t> pos;
  for (std::size_t i = 0; i < downs.size(); ++i) pos.emplace(downs[i], i);
  std::vector<std::string> enames(n);
  std::vector<Element> renaming(n);
  std::vector<bool> hit(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = pos.find(row_mask[a]);
    if (it == pos.end() || hit[it->second])
      throw InvalidInput("table: lattice is not the down-set lattice of its join-irreducibles");
    hit[it->second] = true;
    renaming[a] = static_cast<Element>(it->second);
    enames[it->second] = nm[a];
  }
  return {frame_from_poset(p, enames), renaming};
}

FamilyFrame frame_from_set_family(std::vector<Bits> const& family_in, std::vector<std::string> names) {
  if (family_in.empty()) throw InvalidInput("set family: empty");
  if (!names.empty() && names.size() != family_in.size()) throw InvalidInput("set family: name count mismatch");
  std::vector<Bits> family;
  std::unordered_map<Bits, std::size_t, BitsHash> pos;
  std::vector<std::size_t> slot(family_in.size());
  for (std::size_t i = 0; i < family_in.size(); ++i) {
    auto [it, fresh] = pos.emplace(family_in[i], family.size());
    if (fresh) family.push_back(family_in[i]);
    slot[i] = it->second;
  }
  std::size_t k = family.size();
  Bits lo = family[0], hi = family[0];
  for (auto const& f : family) {
    lo &= f;
    hi |= f;
  }
  if (!pos.count(lo) || !pos.count(hi)) throw InvalidInput("set family: no least or greatest member");
  if (k <= 1024) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (!pos.count(family[i] | family[j]) || !pos.count(family[i] & family[j]))
          throw InvalidInput("set family: not closed under union and intersection");
  }
  std::size_t lo_i = pos.at(lo);
  std::vector<std::size_t> jis;
  for (std::size_t i = 0; i < k; ++i) {
    if (i == lo_i) continue;
    Bits u(family[i].size());
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && family[j].subset_of(family[i])) u |= family[j];
    if (!(u == family[i])) jis.push_back(i);
  }
  if (jis.size() > 64) throw CapExceeded("set family join-irreducibles", 64, jis.size());
  std::vector<std::pair<std::size_t, std::size_t>> le;
  for (std::size_t a = 0; a < jis.size(); ++a)
    for (std::size_t b = 0; b < jis.size(); ++b)
      if (a != b && family[jis[a]].subset_of(family[jis[b]])) le.emplace_back(a, b);
  std::vector<std::string> pnames;
  for (std::size_t a = 0; a < jis.size(); ++a) pnames.push_back("j" + std::to_string(a));
  Poset p(jis.size(), le, pnames);
  Caps c = caps();
  if (p.size() > c.max_ji) throw CapExceeded("max_ji", c.max_ji, p.size());
  std::vector<Mask> downs = enumerate_down_sets(p, c.max_elements);
  if (downs.size() != k) throw InvalidInput("set family: not a distributive lattice of sets");
  std::unordered_map<Mask, std::size_t> dpos;
  for (std::size_t i = 0; i < downs.size(); ++i) dpos.emplace(downs[i], i);
  std::vector<Element> elem(k);
  std::vector<bool> hit(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    Mask m = 0;
    for (std::size_t a = 0; a < jis.size(); ++a)
      if (family[jis[a]].subset_of(family[i])) m |= Mask{1} << a;
    auto it = dpos.find(m);
    if (it == dpos.end() || hit[it->second]) throw InvalidInput("set family: not a distributive lattice of sets");
    hit[it->second] = true;
    elem[i] = static_cast<Element>(it->second);
  }
  std::vector<std::string> enames;
  if (!names.empty()) {
    enames.assign(k, "");
    for (std::size_t i = 0; i < family_in.size(); ++i)
      if (enames[elem[slot[i]]].empty()) enames[elem[slot[i]]] = names[i];
    // Name the join-irreducible points after their members.
    for (std::size_t a = 0; a < jis.size(); ++a) pnames[a] = enames[elem[jis[a]]];
    p = Poset(jis.size(), le, pnames);
  }
  FamilyFrame out;
  out.frame = frame_from_poset(p, enames);
  out.member.resize(family_in.size());
  for (std::size_t i = 0; i < family_in.size(); ++i) out.member[i] = elem[slot[i]];
  return out;
}

FamilyFrame frame_from_mask_family(std::vector<Mask> const& family, std::size_t universe,
                                   std::vector<std::string> names) {
  std::vector<Bits> bits;
  bits.reserve(family.size());
  for (Mask m : family) {
    Bits b(universe);
    for (std::size_t i = 0; i < universe; ++i)
      if ((m >> i) & 1U) b.set(i);
    bits.push_back(std::move(b));
  }
  return frame_from_set_family(bits, std::move(names));
}

FramePtr two_frame() { return frame_from_poset(Poset::antichain(1, {"1"})); }

FramePtr trivial_frame() { return frame_from_poset(Poset::antichain(0)); }

FramePtr chain_frame(std::size_t n) {
  if (n == 0) throw InvalidInput("chain: needs at least one element");
  std::vector<std::string> names;
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back(n == 3 ? std::string("m") : "m" + std::to_string(i));
  if (n >= 2) names.push_back("t");
  return frame_from_poset(Poset::chain(n - 1, names));
}

FramePtr diamond_frame() { return frame_from_poset(Poset::antichain(2, {"a", "b"})); }

FramePtr boolean_frame(std::size_t atoms) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms; ++i)
    names.push_back(atoms <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  return frame_from_poset(Poset::antichain(atoms, names));
}

}  // namespace pfw
