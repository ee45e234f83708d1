#include "prosite/stone.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "prosite/closure.hpp"
#include "prosite/error.hpp"

namespace prosite {

DistLattice DistLattice::from_proset(const Proset& p) {
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.equivalent(a, b)) throw InputError("lattice order is not antisymmetric: " + p.label(a) + " and " + p.label(b));
  DistLattice d;
  d.order_ = p;
  int bottom = -1, top = -1;
  for (int a = 0; a < n; ++a) {
    if (p.up(a) == p.all()) bottom = a;
    if (p.down(a) == p.all()) top = a;
  }
  if (bottom < 0) throw InputError("lattice has no bottom element");
  if (top < 0) throw InputError("lattice has no top element");
  d.bottom_ = bottom;
  d.top_ = top;
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  d.join_.assign(nn, -1);
  d.meet_.assign(nn, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ElemSet ups = p.up(a) & p.up(b), downs = p.down(a) & p.down(b);
      for (int u : ups)
        if (ups.subset_of(p.up(u))) d.join_[d.idx(a, b)] = u;
      for (int m : downs)
        if (downs.subset_of(p.down(m))) d.meet_[d.idx(a, b)] = m;
      if (d.join(a, b) < 0) throw InputError("no join of " + p.label(a) + " and " + p.label(b));
      if (d.meet(a, b) < 0) throw InputError("no meet of " + p.label(a) + " and " + p.label(b));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (d.meet(a, d.join(b, c)) != d.join(d.meet(a, b), d.meet(a, c)))
          throw InputError("lattice is not distributive at (" + p.label(a) + ", " + p.label(b) + ", " + p.label(c) + ")");
  return d;
}

DistLattice DistLattice::from_family(std::vector<std::string> labels, const std::vector<ElemSet>& sets) {
  if (labels.size() != sets.size()) throw InputError("one label per set is required");
  if (sets.size() > static_cast<std::size_t>(kMaxElements))
    throw ResourceError("lattice has " + std::to_string(sets.size()) + " elements; at most 64 are supported");
  std::set<ElemSet> present(sets.begin(), sets.end());
  if (present.size() != sets.size()) throw InputError("family lists a set twice");
  for (ElemSet a : sets)
    for (ElemSet b : sets)
      if (!present.count(a | b) || !present.count(a & b)) throw InputError("family is not closed under union and intersection");
  std::vector<ElemSet> below(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (sets[j].subset_of(sets[i])) below[i].insert(static_cast<int>(j));
  return from_proset(Proset::from_rows(std::move(labels), std::move(below)));
}

DistLattice two_element_lattice() { return chain_lattice(2); }

DistLattice chain_lattice(int n) {
  if (n < 1 || n > kMaxElements) throw InputError("chain length must be between 1 and 64");
  std::vector<std::string> labels;
  std::vector<ElemSet> below;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    below.push_back(ElemSet::full(i + 1));
  }
  return DistLattice::from_proset(Proset::from_rows(std::move(labels), std::move(below)));
}

DistLattice downset_lattice(const Proset& p) {
  std::vector<ElemSet> sets = enumerate_closed_sets(
      p.all(), [&](ElemSet s) { return down_closure(p, s); }, static_cast<std::size_t>(kMaxElements) + 1,
      [] { throw ResourceError("down-set lattice exceeds 64 elements"); });
  std::vector<std::string> labels;
  for (ElemSet s : sets) labels.push_back(p.label_set(s));
  return DistLattice::from_family(std::move(labels), sets);
}

bool is_lattice_hom(const DistLattice& d, const DistLattice& e, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != d.size()) return false;
  for (int v : f)
    if (v < 0 || v >= e.size()) return false;
  auto at = [&](int i) { return f[static_cast<std::size_t>(i)]; };
  if (at(d.bottom()) != e.bottom() || at(d.top()) != e.top()) return false;
  for (int a = 0; a < d.size(); ++a)
    for (int b = 0; b < d.size(); ++b)
      if (at(d.join(a, b)) != e.join(at(a), at(b)) || at(d.meet(a, b)) != e.meet(at(a), at(b))) return false;
  return true;
}

namespace {

struct LatticeHomSearch {
  const DistLattice& d;
  const DistLattice& e;
  std::size_t limit;
  std::vector<int> map;
  std::vector<std::vector<int>> found;

  bool consistent(int x) const {
    auto at = [&](int i) { return map[static_cast<std::size_t>(i)]; };
    for (int y = 0; y < d.size(); ++y) {
      if (at(y) < 0) continue;
      if (d.le(x, y) && !e.le(at(x), at(y))) return false;
      if (d.le(y, x) && !e.le(at(y), at(x))) return false;
      const int j = d.join(x, y), m = d.meet(x, y);
      if (at(j) >= 0 && at(j) != e.join(at(x), at(y))) return false;
      if (at(m) >= 0 && at(m) != e.meet(at(x), at(y))) return false;
      for (int z = 0; z < d.size(); ++z) {
        if (at(z) < 0) continue;
        if (d.join(y, z) == x && e.join(at(y), at(z)) != at(x)) return false;
        if (d.meet(y, z) == x && e.meet(at(y), at(z)) != at(x)) return false;
      }
    }
    return true;
  }

  void extend(int x) {
    if (found.size() >= limit) return;
    if (x == d.size()) {
      found.push_back(map);
      return;
    }
    if (map[static_cast<std::size_t>(x)] >= 0) {
      if (consistent(x)) extend(x + 1);
      return;
    }
    for (int c = 0; c < e.size(); ++c) {
      map[static_cast<std::size_t>(x)] = c;
      if (consistent(x)) extend(x + 1);
    }
    map[static_cast<std::size_t>(x)] = -1;
  }
};

}  // namespace

std::vector<std::vector<int>> lattice_homomorphisms(const DistLattice& d, const DistLattice& e, std::size_t limit) {
  LatticeHomSearch s{d, e, limit, std::vector<int>(static_cast<std::size_t>(d.size()), -1), {}};
  s.map[static_cast<std::size_t>(d.bottom())] = e.bottom();
  if (d.top() != d.bottom()) s.map[static_cast<std::size_t>(d.top())] = e.top();
  else if (e.top() != e.bottom()) return {};
  s.extend(0);
  return s.found;
}

namespace {

struct OrderIsoSearch {
  const Proset& a;
  const Proset& b;
  std::vector<std::pair<int, int>> sa, sb;
  std::vector<int> map, used;

  bool extend(int x) {
    if (x == a.size()) return true;
    for (int c = 0; c < b.size(); ++c) {
      if (used[static_cast<std::size_t>(c)] || sa[static_cast<std::size_t>(x)] != sb[static_cast<std::size_t>(c)]) continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        const int cy = map[static_cast<std::size_t>(y)];
        ok = a.le(x, y) == b.le(c, cy) && a.le(y, x) == b.le(cy, c);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(x)] = c;
      used[static_cast<std::size_t>(c)] = 1;
      if (extend(x + 1)) return true;
      used[static_cast<std::size_t>(c)] = 0;
    }
    return false;
  }
};

std::vector<std::pair<int, int>> order_signatures(const Proset& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.size(); ++x) out.emplace_back(p.down(x).size(), p.up(x).size());
  return out;
}

}  // namespace

std::optional<std::vector<int>> find_order_isomorphism(const Proset& a, const Proset& b) {
  if (a.size() != b.size()) return std::nullopt;
  OrderIsoSearch s{a, b, order_signatures(a), order_signatures(b), std::vector<int>(static_cast<std::size_t>(a.size()), -1),
                   std::vector<int>(static_cast<std::size_t>(b.size()), 0)};
  auto sa = s.sa, sb = s.sb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb || !s.extend(0)) return std::nullopt;
  return s.map;
}

bool is_prime_lattice_filter(const DistLattice& d, ElemSet f) {
  if (f.empty() || f.contains(d.bottom())) return false;
  for (int a : f)
    for (int b = 0; b < d.size(); ++b)
      if (d.le(a, b) && !f.contains(b)) return false;
  for (int a : f)
    for (int b : f)
      if (!f.contains(d.meet(a, b))) return false;
  for (int a = 0; a < d.size(); ++a)
    for (int b = 0; b < d.size(); ++b)
      if (f.contains(d.join(a, b)) && !f.contains(a) && !f.contains(b)) return false;
  return true;
}

LatticeSpectrum spec_dlat(const DistLattice& d) {
  LatticeSpectrum out;
  // every filter of a finite lattice is principal; points in bitset order
  std::vector<std::pair<ElemSet, int>> found;
  for (int a = 0; a < d.size(); ++a) {
    const ElemSet f = d.order().up(a);
    if (is_prime_lattice_filter(d, f)) found.emplace_back(f, a);
  }
  std::sort(found.begin(), found.end());
  std::vector<std::string> labels;
  for (auto [f, a] : found) {
    out.filters.push_back(f);
    labels.push_back(d.label(a));
  }
  for (int a = 0; a < d.size(); ++a) {
    ElemSet s;
    for (std::size_t i = 0; i < out.filters.size(); ++i)
      if (out.filters[i].contains(a)) s.insert(static_cast<int>(i));
    out.phi.push_back(s);
  }
  FiniteSpace space = FiniteSpace::from_subbasis(std::move(labels), out.phi);
  out.spectral = make_spectral(std::move(space), out.phi);
  return out;
}

std::vector<int> spec_dlat_map(const LatticeSpectrum& sd, const LatticeSpectrum& se, const DistLattice& d,
                               const std::vector<int>& f) {
  std::vector<int> out;
  for (ElemSet g : se.filters) {
    ElemSet pre;
    for (int a = 0; a < d.size(); ++a)
      if (g.contains(f[static_cast<std::size_t>(a)])) pre.insert(a);
    auto it = std::find(sd.filters.begin(), sd.filters.end(), pre);
    if (it == sd.filters.end()) throw ContractError("preimage of a prime filter is not prime; map is not a lattice homomorphism");
    out.push_back(static_cast<int>(it - sd.filters.begin()));
  }
  return out;
}

std::string point_set_label(const FiniteSpace& x, ElemSet s) {
  std::string out = "{";
  bool first = true;
  for (int p : s) {
    if (!first) out += ",";
    out += x.label(p);
    first = false;
  }
  return out + "}";
}

DistLattice dlat_of_spectral(const FiniteSpace& x) {
  if (!is_spectral(x)) throw ContractError("space is not spectral");
  std::vector<std::string> labels;
  for (ElemSet u : x.opens()) labels.push_back(point_set_label(x, u));
  return DistLattice::from_family(std::move(labels), x.opens());
}

DistLattice dlat_of_spectral(const SpectralSpace& x) { return dlat_of_spectral(x.space); }

bool is_boolean_ring(const FiniteCommRing& r) {
  for (int a = 0; a < r.size(); ++a)
    if (r.mul(a, a) != a || r.add(a, a) != r.zero()) return false;
  return true;
}

std::vector<ElemSet> clopen_sets(const FiniteSpace& x) {
  std::vector<ElemSet> out;
  for (ElemSet u : x.opens())
    if (x.is_open(x.all() - u)) out.push_back(u);
  return out;
}

BoolRing clopen_boolring(const FiniteSpace& x) {
  BoolRing out;
  out.clopens = clopen_sets(x);
  const int n = static_cast<int>(out.clopens.size());
  if (n > kMaxElements) throw ResourceError("space has " + std::to_string(n) + " clopen sets; at most 64 are supported");
  auto pos = [&](ElemSet s) {
    return static_cast<int>(std::lower_bound(out.clopens.begin(), out.clopens.end(), s) - out.clopens.begin());
  };
  std::vector<std::string> labels;
  std::vector<int> add, mul;
  for (ElemSet c : out.clopens) labels.push_back(point_set_label(x, c));
  for (ElemSet a : out.clopens)
    for (ElemSet b : out.clopens) {
      add.push_back(pos(a ^ b));
      mul.push_back(pos(a & b));
    }
  out.ring = FiniteCommRing::from_tables(std::move(labels), std::move(add), std::move(mul));
  if (!is_boolean_ring(out.ring)) throw ContractError("clopen ring is not Boolean");
  return out;
}

namespace {

void hochster_extend(const SpectralSpace& x, const FiniteSpace& spec, std::vector<int>& map, int p,
                     std::vector<std::vector<int>>& out) {
  if (p == spec.size()) {
    if (!is_continuous(spec, x.space, map)) return;
    for (ElemSet b : x.base) {
      ElemSet pre;
      for (int q = 0; q < spec.size(); ++q)
        if (b.contains(map[static_cast<std::size_t>(q)])) pre.insert(q);
      if (!spec.is_open(pre)) return;
    }
    out.push_back(map);
    return;
  }
  for (int t = 0; t < x.space.size(); ++t) {
    bool ok = true;
    // continuous maps of finite spaces preserve specialization
    for (int q = 0; q < p && ok; ++q) {
      const int tq = map[static_cast<std::size_t>(q)];
      if (spec.specializes(p, q) && !x.space.specializes(t, tq)) ok = false;
      if (spec.specializes(q, p) && !x.space.specializes(tq, t)) ok = false;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(p)] = t;
    hochster_extend(x, spec, map, p + 1, out);
  }
}

std::vector<int> idempotents(const FiniteCommRing& a) {
  std::vector<int> out;
  for (int e = 0; e < a.size(); ++e)
    if (a.is_idempotent(e)) out.push_back(e);
  return out;
}

bool is_boolean_algebra_map(const std::vector<ElemSet>& clopens, const FiniteSpace& x, const FiniteCommRing& a,
                            const std::vector<int>& h) {
  auto pos = [&](ElemSet s) {
    return static_cast<std::size_t>(std::lower_bound(clopens.begin(), clopens.end(), s) - clopens.begin());
  };
  if (h[pos(ElemSet{})] != a.zero() || h[pos(x.all())] != a.one()) return false;
  for (std::size_t i = 0; i < clopens.size(); ++i)
    for (std::size_t j = 0; j < clopens.size(); ++j) {
      const int e = h[i], f = h[j];
      if (h[pos(clopens[i] & clopens[j])] != a.mul(e, f)) return false;
      if (h[pos(clopens[i] | clopens[j])] != a.sub(a.add(e, f), a.mul(e, f))) return false;
    }
  return true;
}

}  // namespace

std::vector<std::vector<int>> evaluate_hochster(const SpectralSpace& x, const FiniteCommRing& a) {
  const RingSpectrum spec = spec_ring(a);
  std::vector<std::vector<int>> out;
  std::vector<int> map(static_cast<std::size_t>(spec.spectral.space.size()), -1);
  hochster_extend(x, spec.spectral.space, map, 0, out);
  return out;
}

std::vector<std::vector<int>> evaluate_boolean_smashing(const FiniteSpace& x, const FiniteCommRing& a) {
  const std::vector<ElemSet> clopens = clopen_sets(x);
  std::vector<ElemSet> atoms;
  for (ElemSet c : clopens) {
    if (c.empty()) continue;
    bool minimal = true;
    for (ElemSet d : clopens)
      if (!d.empty() && d != c && d.subset_of(c)) minimal = false;
    if (minimal) atoms.push_back(c);
  }
  const std::vector<int> idem = idempotents(a);
  std::vector<std::vector<int>> out;
  std::vector<int> assign(atoms.size(), -1);

  auto emit = [&] {
    int total = a.zero();
    for (int e : assign) total = a.add(total, e);
    if (total != a.one()) return;
    std::vector<int> h;
    for (ElemSet c : clopens) {
      int v = a.zero();
      for (std::size_t k = 0; k < atoms.size(); ++k)
        if (atoms[k].subset_of(c)) v = a.add(v, assign[k]);
      h.push_back(v);
    }
    if (is_boolean_algebra_map(clopens, x, a, h)) out.push_back(std::move(h));
  };
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == atoms.size()) {
      emit();
      return;
    }
    for (int e : idem) {
      bool orthogonal = true;
      for (std::size_t j = 0; j < k && orthogonal; ++j) orthogonal = a.mul(e, assign[j]) == a.zero();
      if (!orthogonal) continue;
      assign[k] = e;
      self(self, k + 1);
    }
  };
  extend(extend, 0);
  return out;
}

Coincidence coincidence_on_stone(const FiniteSpace& x, const FiniteCommRing& a) {
  for (int p = 0; p < x.size(); ++p)
    if (x.neighbourhood(p) != ElemSet::single(p))
      throw ContractError("space is not Stone: point " + x.label(p) + " is not isolated");
  std::vector<ElemSet> all_subsets;
  for (ElemSet u : x.opens()) all_subsets.push_back(u);
  const SpectralSpace sx = make_spectral(x, all_subsets);
  const RingSpectrum spec = spec_ring(a);
  const auto hoc = evaluate_hochster(sx, a);
  const auto bool_maps = evaluate_boolean_smashing(x, a);
  const std::vector<ElemSet> clopens = clopen_sets(x);
  const std::vector<int> idem = idempotents(a);

  std::map<std::vector<int>, int> bool_index;
  for (std::size_t i = 0; i < bool_maps.size(); ++i) bool_index.emplace(bool_maps[i], static_cast<int>(i));

  Coincidence out;
  out.hochster = hoc.size();
  out.boolean = bool_maps.size();
  std::set<int> hit;
  bool natural = true;
  for (std::size_t i = 0; i < hoc.size() && natural; ++i) {
    // the idempotent whose support is the preimage of each clopen
    std::vector<int> h;
    for (ElemSet c : clopens) {
      ElemSet pre;
      for (int q = 0; q < spec.spectral.space.size(); ++q)
        if (c.contains(hoc[i][static_cast<std::size_t>(q)])) pre.insert(q);
      int found = -1;
      for (int e : idem)
        if (basic_open(spec, e) == pre) found = e;
      h.push_back(found);
    }
    auto it = bool_index.find(h);
    if (it == bool_index.end() || !hit.insert(it->second).second) {
      natural = false;
      break;
    }
    out.bijection.emplace_back(static_cast<int>(i), it->second);
  }
  out.coincide = natural && hoc.size() == bool_maps.size();
  if (!out.coincide) out.bijection.clear();
  return out;
}

LatticePushout lattice_pushout(const DistLattice& d0, const DistLattice& d1, const DistLattice& d2,
                               const std::vector<int>& f1, const std::vector<int>& f2) {
  if (!is_lattice_hom(d0, d1, f1) || !is_lattice_hom(d0, d2, f2))
    throw ContractError("pushout legs must be bounded lattice homomorphisms");
  const DistLattice two = two_element_lattice();
  const auto h1 = lattice_homomorphisms(d1, two);
  const auto h2 = lattice_homomorphisms(d2, two);
  std::vector<std::pair<std::size_t, std::size_t>> models;
  for (std::size_t i = 0; i < h1.size(); ++i)
    for (std::size_t j = 0; j < h2.size(); ++j) {
      bool agree = true;
      for (int x = 0; x < d0.size() && agree; ++x)
        agree = h1[i][static_cast<std::size_t>(f1[static_cast<std::size_t>(x)])] ==
                h2[j][static_cast<std::size_t>(f2[static_cast<std::size_t>(x)])];
      if (agree) models.emplace_back(i, j);
    }
  if (models.size() > static_cast<std::size_t>(kMaxElements))
    throw ResourceError("pushout has " + std::to_string(models.size()) + " two-valued models; at most 64 are supported");

  auto vec = [&](const std::vector<std::vector<int>>& homs, bool left, int x) {
    ElemSet s;
    for (std::size_t m = 0; m < models.size(); ++m) {
      const std::size_t h = left ? models[m].first : models[m].second;
      if (homs[h][static_cast<std::size_t>(x)] == two.top()) s.insert(static_cast<int>(m));
    }
    return s;
  };
  std::vector<ElemSet> gen1, gen2;
  for (int x = 0; x < d1.size(); ++x) gen1.push_back(vec(h1, true, x));
  for (int y = 0; y < d2.size(); ++y) gen2.push_back(vec(h2, false, y));

  std::set<ElemSet> family(gen1.begin(), gen1.end());
  family.insert(gen2.begin(), gen2.end());
  for (bool grown = true; grown;) {
    grown = false;
    const std::vector<ElemSet> now(family.begin(), family.end());
    for (ElemSet a : now)
      for (ElemSet b : now)
        grown |= family.insert(a | b).second | family.insert(a & b).second;
    if (family.size() > static_cast<std::size_t>(kMaxElements)) throw ResourceError("pushout lattice exceeds 64 elements");
  }
  const std::vector<ElemSet> sets(family.begin(), family.end());
  const int width = static_cast<int>(models.size());
  std::vector<std::string> labels;
  for (ElemSet s : sets) labels.push_back("[" + s.to_string(width) + "]");
  auto pos = [&](ElemSet s) { return static_cast<int>(std::lower_bound(sets.begin(), sets.end(), s) - sets.begin()); };

  LatticePushout out;
  out.lattice = DistLattice::from_family(std::move(labels), sets);
  for (ElemSet s : gen1) out.first.push_back(pos(s));
  for (ElemSet s : gen2) out.second.push_back(pos(s));
  return out;
}

SpacePullback pullback_space(const FiniteSpace& x1, const FiniteSpace& x2, const FiniteSpace& y,
                             const std::vector<int>& g1, const std::vector<int>& g2) {
  if (!is_continuous(x1, y, g1) || !is_continuous(x2, y, g2)) throw ContractError("pullback legs must be continuous");
  SpacePullback out;
  std::vector<std::string> labels;
  for (int p = 0; p < x1.size(); ++p)
    for (int q = 0; q < x2.size(); ++q)
      if (g1[static_cast<std::size_t>(p)] == g2[static_cast<std::size_t>(q)]) {
        out.first.push_back(p);
        out.second.push_back(q);
        labels.push_back("(" + x1.label(p) + "," + x2.label(q) + ")");
      }
  if (labels.size() > static_cast<std::size_t>(kMaxSpacePoints))
    throw ResourceError("pullback has " + std::to_string(labels.size()) + " points; the cap is " +
                        std::to_string(kMaxSpacePoints));
  std::vector<ElemSet> subbasis;
  for (ElemSet u : x1.opens()) {
    ElemSet s;
    for (std::size_t i = 0; i < out.first.size(); ++i)
      if (u.contains(out.first[i])) s.insert(static_cast<int>(i));
    subbasis.push_back(s);
  }
  for (ElemSet v : x2.opens()) {
    ElemSet s;
    for (std::size_t i = 0; i < out.second.size(); ++i)
      if (v.contains(out.second[i])) s.insert(static_cast<int>(i));
    subbasis.push_back(s);
  }
  out.space = FiniteSpace::from_subbasis(std::move(labels), subbasis);
  return out;
}

}  // namespace prosite
