#pragma once

// Shared fixtures and brute-force oracles. The oracles scan every subset or
// assignment directly and share no code with the library algorithms they
// check; they are only fast enough for the tiny instances used here.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "prosite/order.hpp"
#include "prosite/points.hpp"
#include "prosite/ring.hpp"
#include "prosite/site.hpp"
#include "prosite/stone.hpp"

namespace fixtures {

using prosite::ElemSet;
using prosite::Proset;
using prosite::Site;

inline Proset chain2() { return prosite::close_relation({"0", "1"}, {{"0", "1"}}); }
inline Proset singleton() { return prosite::close_relation({"a"}, {}); }
inline Proset antichain() { return prosite::close_relation({"x", "y"}, {}); }
// z <= a <= t, z <= b <= t
inline Proset diamond() {
  return prosite::close_relation({"z", "a", "b", "t"}, {{"z", "a"}, {"z", "b"}, {"a", "t"}, {"b", "t"}});
}
inline ElemSet ids(const Proset& p, std::initializer_list<const char*> labels) {
  ElemSet s;
  for (const char* l : labels) s.insert(p.id_of(l));
  return s;
}
// Diamond with t covered by {a, b}.
inline Site diamond_cover() {
  const Proset d = diamond();
  return prosite::saturate(d, {{d.id_of("t"), ids(d, {"a", "b"})}});
}

inline std::vector<ElemSet> all_subsets(int n) {
  std::vector<ElemSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
  return out;
}

inline prosite::FiniteSpace sierpinski() {
  return prosite::FiniteSpace::from_opens({"s", "g"}, {ElemSet{}, ElemSet(0b10), ElemSet(0b11)});
}

}  // namespace fixtures

namespace oracle {

using prosite::ElemSet;

// Reflexive-transitive closure by repeated relaxation over a bool matrix.
inline std::vector<std::vector<bool>> closure(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : pairs) r[a][b] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (r[a][b] && r[b][c] && !r[a][c]) r[a][c] = changed = true;
  }
  return r;
}

inline bool is_down_closed(const prosite::Proset& p, ElemSet s) {
  for (int a : s)
    for (int b = 0; b < p.size(); ++b)
      if (p.le(b, a) && !s.contains(b)) return false;
  return true;
}

// Least down-closed superset by scanning all subsets.
inline ElemSet down_closure(const prosite::Proset& p, ElemSet s) {
  ElemSet best = p.all();
  for (ElemSet t : fixtures::all_subsets(p.size()))
    if (s.subset_of(t) && is_down_closed(p, t) && t.size() < best.size()) best = t;
  return best;
}

inline std::optional<int> meet(const prosite::Proset& p, int a, int b) {
  std::vector<int> lower;
  for (int c = 0; c < p.size(); ++c)
    if (p.le(c, a) && p.le(c, b)) lower.push_back(c);
  for (int m : lower) {
    bool greatest = true;
    for (int c : lower) greatest = greatest && p.le(c, m);
    if (greatest) return m;  // lower is in id order, so this is the least id
  }
  return std::nullopt;
}

// Sieves on c: down-closed subsets of down(c).
inline std::vector<ElemSet> sieves(const prosite::Proset& p, int c) {
  std::vector<ElemSet> out;
  for (ElemSet s : fixtures::all_subsets(p.size()))
    if (s.subset_of(p.down(c)) && is_down_closed(p, s)) out.push_back(s);
  return out;
}

// Least topology containing a coverage: intersect every assignment of
// covering flags that satisfies the three axioms and contains the coverage.
inline std::vector<std::vector<ElemSet>> least_topology(const prosite::Proset& p, const prosite::Coverage& cov) {
  const int n = p.size();
  std::vector<std::vector<ElemSet>> sv;
  std::vector<std::pair<int, int>> slots;  // (root, sieve index)
  for (int c = 0; c < n; ++c) {
    sv.push_back(sieves(p, c));
    for (std::size_t i = 0; i < sv.back().size(); ++i) slots.emplace_back(c, static_cast<int>(i));
  }
  auto slot_of = [&](int c, ElemSet s) {
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (slots[k].first == c && sv[c][slots[k].second] == s) return static_cast<int>(k);
    return -1;
  };
  const std::size_t m = slots.size();
  std::vector<bool> meet_all(m, true);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    auto covers = [&](int c, ElemSet s) { return (mask >> slot_of(c, s)) & 1U; };
    bool ok = true;
    for (const auto& f : cov) ok = ok && covers(f.root, oracle::down_closure(p, f.generators));
    for (int c = 0; c < n && ok; ++c) {
      ok = covers(c, p.down(c));
      for (ElemSet r : sv[c]) {
        if (!ok) break;
        if (covers(c, r))
          for (int d : p.down(c)) ok = ok && covers(d, r & p.down(d));
        // transitivity
        if (!covers(c, r)) continue;
        for (ElemSet s : sv[c]) {
          bool locally = true;
          for (int d : r) locally = locally && covers(d, s & p.down(d));
          if (locally && !covers(c, s)) ok = false;
        }
      }
    }
    if (!ok) continue;
    for (std::size_t k = 0; k < m; ++k) meet_all[k] = meet_all[k] && ((mask >> k) & 1U);
  }
  std::vector<std::vector<ElemSet>> out(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < m; ++k)
    if (meet_all[k]) out[slots[k].first].push_back(sv[slots[k].first][slots[k].second]);
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

inline bool is_ideal(const prosite::Site& site, ElemSet s) {
  const auto& p = site.proset();
  if (!is_down_closed(p, s)) return false;
  for (int c = 0; c < p.size(); ++c)
    for (ElemSet r : site.covers(c))
      if (r.subset_of(s) && !s.contains(c)) return false;
  return true;
}

inline std::vector<ElemSet> ideals(const prosite::Site& site) {
  std::vector<ElemSet> out;
  for (ElemSet s : fixtures::all_subsets(site.size()))
    if (oracle::is_ideal(site, s)) out.push_back(s);
  return out;
}

inline bool is_prime_filter(const prosite::Site& site, ElemSet f) {
  const auto& p = site.proset();
  if (f.empty()) return false;
  for (int a : f)
    for (int b = 0; b < p.size(); ++b)
      if (p.le(a, b) && !f.contains(b)) return false;
  for (int a : f)
    for (int b : f) {
      bool found = false;
      for (int c : f) found = found || (p.le(c, a) && p.le(c, b));
      if (!found) return false;
    }
  for (int a : f)
    for (ElemSet r : site.covers(a))
      if (!r.intersects(f)) return false;
  return true;
}

inline std::vector<ElemSet> prime_filters(const prosite::Site& site) {
  std::vector<ElemSet> out;
  for (ElemSet s : fixtures::all_subsets(site.size()))
    if (oracle::is_prime_filter(site, s)) out.push_back(s);
  return out;
}

// Sober: each irreducible closed set is the closure of exactly one point.
inline bool is_sober(const prosite::FiniteSpace& x) {
  std::vector<ElemSet> closed;
  for (ElemSet u : x.opens()) closed.push_back(x.all() - u);
  for (ElemSet c : closed) {
    if (c.empty()) continue;
    bool irreducible = true;
    for (ElemSet a : closed)
      for (ElemSet b : closed)
        if ((a | b) == c && a != c && b != c) irreducible = false;
    if (!irreducible) continue;
    int generic = 0;
    for (int p : c) {
      ElemSet cl = x.all();
      for (ElemSet d : closed)
        if (d.contains(p)) cl &= d;
      if (cl == c) ++generic;
    }
    if (generic != 1) return false;
  }
  return true;
}

inline std::vector<ElemSet> ring_ideals(const prosite::FiniteCommRing& r) {
  std::vector<ElemSet> out;
  for (ElemSet s : fixtures::all_subsets(r.size())) {
    if (!s.contains(r.zero())) continue;
    bool ok = true;
    for (int a : s)
      for (int b = 0; b < r.size() && ok; ++b) {
        if (s.contains(b) && !s.contains(r.add(a, r.neg(b)))) ok = false;
        if (!s.contains(r.mul(a, b))) ok = false;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::vector<ElemSet> prime_ideals(const prosite::FiniteCommRing& r) {
  std::vector<ElemSet> out;
  for (ElemSet s : oracle::ring_ideals(r)) {
    if (s.contains(r.one())) continue;
    bool prime = true;
    for (int a = 0; a < r.size(); ++a)
      for (int b = 0; b < r.size(); ++b)
        if (s.contains(r.mul(a, b)) && !s.contains(a) && !s.contains(b)) prime = false;
    if (prime) out.push_back(s);
  }
  return out;
}

// |R_S| = |eR| where e is the idempotent power of the product of S.
inline int localization_order(const prosite::FiniteCommRing& r, ElemSet s) {
  int prod = r.one();
  for (int x : s) prod = r.mul(prod, x);
  int e = prod;
  for (int k = 0; k < 64; ++k) e = r.mul(e, prod);
  while (r.mul(e, e) != e) e = r.mul(e, prod);
  ElemSet image;
  for (int x = 0; x < r.size(); ++x) image.insert(r.mul(e, x));
  return image.size();
}

// Prime filters of a lattice by subset scan.
inline std::vector<ElemSet> lattice_prime_filters(const prosite::DistLattice& d) {
  std::vector<ElemSet> out;
  for (ElemSet f : fixtures::all_subsets(d.size())) {
    if (f.empty() || f.contains(d.bottom())) continue;
    bool ok = true;
    for (int a = 0; a < d.size(); ++a)
      for (int b = 0; b < d.size(); ++b) {
        if (f.contains(a) && d.le(a, b) && !f.contains(b)) ok = false;
        if (f.contains(a) && f.contains(b) && !f.contains(d.meet(a, b))) ok = false;
        if (f.contains(d.join(a, b)) && !f.contains(a) && !f.contains(b)) ok = false;
      }
    if (ok) out.push_back(f);
  }
  return out;
}

}  // namespace oracle
