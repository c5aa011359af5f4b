#include "pfw/catalog.hpp"

#include <algorithm>
#include <set>

#include "pfw/error.hpp"
#include "pfw/hom.hpp"
#include "pfw/sublattice.hpp"

namespace pfw {

std::vector<Poset> posets_up_to_iso(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  if (slots.size() > 20) throw CapExceeded("poset enumeration points", 7, n);
  std::set<std::vector<Mask>> relations;
  std::vector<Poset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((bits >> k) & 1U) covers.push_back(slots[k]);
    Poset p = Poset::from_covers(n, covers);
    std::vector<Mask> key;
    for (std::size_t i = 0; i < n; ++i) key.push_back(p.down(i));
    if (!relations.insert(key).second) continue;
    bool fresh = std::none_of(out.begin(), out.end(),
                              [&](Poset const& q) { return find_poset_isomorphism(p, q).has_value(); });
    if (fresh) out.push_back(p);
  }
  return out;
}

namespace {

std::vector<NamedFrame> frames_from_posets(std::size_t max_points, std::size_t max_elements) {
  std::vector<NamedFrame> out;
  for (std::size_t n = 0; n <= max_points; ++n) {
    for (auto const& p : posets_up_to_iso(n)) {
      try {
        enumerate_down_sets(p, max_elements);
      } catch (CapExceeded const&) {
        continue;
      }
      FramePtr f = frame_from_poset(p);
      out.push_back({"", f});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](NamedFrame const& a, NamedFrame const& b) { return a.frame->size() < b.frame->size(); });
  std::size_t k = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    k = (i > 0 && out[i - 1].frame->size() == out[i].frame->size()) ? k + 1 : 0;
    out[i].name = "L" + std::to_string(out[i].frame->size()) + "." + std::to_string(k);
  }
  return out;
}

}  // namespace

std::vector<NamedFrame> frame_catalog(std::size_t max_elements) {
  return frames_from_posets(max_elements == 0 ? 0 : max_elements - 1, max_elements);
}

std::vector<NamedFrame> ji_catalog(std::size_t max_ji) {
  return frames_from_posets(max_ji, std::size_t{1} << max_ji);
}

std::vector<FrithFrame> frith_catalog(std::vector<NamedFrame> const& frames) {
  std::vector<FrithFrame> out;
  for (auto const& f : frames) out.push_back(make_frith(f.frame));
  return out;
}

std::vector<PervinPtr> pervin_spaces(std::size_t n) {
  if (n == 0) return {make_pervin(0, {0})};
  Subset all = static_cast<Subset>((std::uint64_t{1} << n) - 1);
  std::vector<Subset> middle;
  for (Subset s = 1; s < all; ++s) middle.push_back(s);
  if (middle.size() > 20) throw CapExceeded("pervin enumeration universe", 4, n);
  std::vector<PervinPtr> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << middle.size()); ++bits) {
    std::vector<Subset> fam{0, all};
    for (std::size_t k = 0; k < middle.size(); ++k)
      if ((bits >> k) & 1U) fam.push_back(middle[k]);
    std::set<Subset> members(fam.begin(), fam.end());
    bool closed = true;
    for (Subset a : fam) {
      for (Subset b : fam)
        if (!members.count(a | b) || !members.count(a & b)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(make_pervin(n, fam));
  }
  return out;
}

std::vector<PervinPtr> pervin_catalog(std::size_t max_n) {
  std::vector<PervinPtr> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto v = pervin_spaces(n);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Poset random_poset(Rng& rng, std::size_t n, double edge_probability) {
  std::bernoulli_distribution edge(edge_probability);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) covers.emplace_back(i, j);
  return Poset::from_covers(n, covers);
}

Poset random_labelled_poset(Rng& rng, std::size_t n, double edge_probability) {
  Poset p = random_poset(rng, n, edge_probability);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [a, b] : p.strict_pairs()) pairs.emplace_back(perm[a], perm[b]);
  return Poset(n, pairs);
}

FramePtr random_frame(Rng& rng, std::size_t max_ji) {
  std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, max_ji));
  return frame_from_poset(random_poset(rng, size(rng)));
}

PervinPtr random_pervin(Rng& rng, std::size_t n) {
  Subset all = n == 0 ? 0 : static_cast<Subset>((std::uint64_t{1} << n) - 1);
  std::bernoulli_distribution pick(0.25);
  std::vector<Subset> fam{0, all};
  for (Subset s = 1; s < all; ++s)
    if (pick(rng)) fam.push_back(s);
  std::set<Subset> seen(fam.begin(), fam.end());
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Subset t : {fam[i] | fam[j], fam[i] & fam[j]})
        if (seen.insert(t).second) fam.push_back(t);
  return make_pervin(n, fam);
}

QuniInstance random_quni_instance(Rng& rng, std::size_t max_ji, std::size_t max_r) {
  std::uniform_int_distribution<int> kind(0, 2);
  FramePtr k;
  int which = kind(rng);
  if (which == 0 || max_ji < 2) {
    std::uniform_int_distribution<std::size_t> atoms(1, std::min<std::size_t>(std::max<std::size_t>(1, max_ji), 4));
    k = boolean_frame(atoms(rng));
  } else if (which == 1) {
    std::uniform_int_distribution<std::size_t> left(1, max_ji - 1);
    std::size_t a = left(rng);
    FramePtr fa = random_frame(rng, a);
    FramePtr fb = random_frame(rng, max_ji - a);
    k = product(make_frith(fa), make_frith(fb)).obj.frame;
  } else {
    k = random_frame(rng, max_ji);
  }
  std::vector<Element> b = complemented_elements(k).members();
  std::shuffle(b.begin(), b.end(), rng);
  std::uniform_int_distribution<std::size_t> count(0, std::min(max_r, b.size()));
  b.resize(count(rng));
  std::sort(b.begin(), b.end());
  return {k, b};
}

std::vector<Sublattice> all_sublattices(FramePtr const& l) {
  if (l->size() > 20) throw CapExceeded("sublattice enumeration elements", 20, l->size());
  std::vector<Sublattice> out;
  if (l->trivial()) return {Sublattice::full(l)};
  std::size_t middle = l->size() - 2;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << middle); ++bits) {
    std::vector<Element> m{l->bottom()};
    for (std::size_t k = 0; k < middle; ++k)
      if ((bits >> k) & 1U) m.push_back(static_cast<Element>(k + 1));
    m.push_back(l->top());
    if (is_sublattice(*l, m)) out.emplace_back(l, m);
  }
  return out;
}

}  // namespace pfw
