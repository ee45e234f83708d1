#include "prosite/points.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "prosite/closure.hpp"
#include "prosite/error.hpp"

namespace prosite {

namespace {

void check_point_count(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxSpacePoints))
    throw ResourceError("space has " + std::to_string(n) + " points; the cap is " + std::to_string(kMaxSpacePoints));
}

}  // namespace

FiniteSpace FiniteSpace::from_subbasis(std::vector<std::string> labels, const std::vector<ElemSet>& subbasis) {
  check_point_count(labels.size());
  const int n = static_cast<int>(labels.size());
  std::vector<ElemSet> nbhd(static_cast<std::size_t>(n), ElemSet::full(n));
  for (ElemSet s : subbasis)
    for (int x : s) nbhd[static_cast<std::size_t>(x)] &= s;
  auto close = [&](ElemSet s) {
    ElemSet out = s;
    for (int x : s) out |= nbhd[static_cast<std::size_t>(x)];
    return out;
  };
  FiniteSpace sp;
  sp.labels_ = std::move(labels);
  sp.opens_ = enumerate_closed_sets(ElemSet::full(n), close, std::numeric_limits<std::size_t>::max(), [] {});
  sp.index_neighbourhoods();
  return sp;
}

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> labels, std::vector<ElemSet> opens) {
  check_point_count(labels.size());
  const int n = static_cast<int>(labels.size());
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  auto has = [&](ElemSet s) { return std::binary_search(opens.begin(), opens.end(), s); };
  if (!has(ElemSet{}) || !has(ElemSet::full(n))) throw InputError("open family must contain the empty set and the space");
  for (ElemSet a : opens) {
    if (!a.subset_of(ElemSet::full(n))) throw InputError("open set references a point outside the space");
    for (ElemSet b : opens)
      if (!has(a | b) || !has(a & b)) throw InputError("open family is not closed under union and intersection");
  }
  FiniteSpace sp;
  sp.labels_ = std::move(labels);
  sp.opens_ = std::move(opens);
  sp.index_neighbourhoods();
  return sp;
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> labels) {
  std::vector<ElemSet> singles;
  for (std::size_t i = 0; i < labels.size(); ++i) singles.push_back(ElemSet::single(static_cast<int>(i)));
  return from_subbasis(std::move(labels), singles);
}

void FiniteSpace::index_neighbourhoods() {
  nbhd_.assign(labels_.size(), all());
  for (ElemSet u : opens_)
    for (int x : u) nbhd_[static_cast<std::size_t>(x)] &= u;
}

bool FiniteSpace::is_open(ElemSet s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

ElemSet FiniteSpace::closure(ElemSet s) const {
  ElemSet out;
  for (int p = 0; p < size(); ++p)
    if (neighbourhood(p).intersects(s)) out.insert(p);
  return out;
}

bool is_prime_filter(const Site& site, ElemSet f) {
  const Proset& p = site.proset();
  if (f.empty()) return false;
  if (up_closure(p, f) != f) return false;
  for (int a : f)
    for (int b : f)
      if ((p.down(a) & p.down(b) & f).empty()) return false;
  for (int a : f)
    for (ElemSet r : site.covers(a))
      if (!r.intersects(f)) return false;
  return true;
}

namespace {

struct FilterSearch {
  const Site& site;
  const Proset& p;
  std::vector<int> order;
  std::vector<ElemSet> found;

  bool viable(ElemSet in, ElemSet out) const {
    if (in.intersects(out)) return false;
    for (int a : in) {
      for (ElemSet r : site.covers(a))
        if (r.subset_of(out)) return false;
      for (int b : in)
        if (b > a && (p.down(a) & p.down(b)).subset_of(out)) return false;
    }
    return true;
  }

  void descend(std::size_t k, ElemSet in, ElemSet out) {
    while (k < order.size() && (in.contains(order[k]) || out.contains(order[k]))) ++k;
    if (k == order.size()) {
      if (is_prime_filter(site, in)) found.push_back(in);
      return;
    }
    const int e = order[k];
    const ElemSet with = in | p.up(e);
    if (viable(with, out)) descend(k + 1, with, out);
    const ElemSet without = out | p.down(e);
    if (viable(in, without)) descend(k + 1, in, without);
  }
};

}  // namespace

std::vector<ElemSet> enumerate_prime_filters(const Site& site) {
  const Proset& p = site.proset();
  FilterSearch s{site, p, {}, {}};
  s.order.resize(static_cast<std::size_t>(p.size()));
  std::iota(s.order.begin(), s.order.end(), 0);
  // most elements above first: including them forces the most
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) { return p.up(a).size() > p.up(b).size(); });
  s.descend(0, ElemSet{}, ElemSet{});
  std::sort(s.found.begin(), s.found.end());
  return s.found;
}

namespace {

std::vector<std::string> filter_labels(const std::vector<ElemSet>& filters, int width) {
  std::vector<std::string> labels;
  for (ElemSet f : filters) labels.push_back(f.to_string(width));
  return labels;
}

}  // namespace

FiniteSpace point_space(const Site& site, std::size_t cap) {
  const auto filters = enumerate_prime_filters(site);
  check_point_count(filters.size());
  const Frame frame = frame_of_ideals(site, cap);
  std::vector<ElemSet> opens;
  for (ElemSet ideal : frame.elements()) {
    ElemSet u;
    for (std::size_t i = 0; i < filters.size(); ++i)
      if (filters[i].intersects(ideal)) u.insert(static_cast<int>(i));
    opens.push_back(u);
  }
  return FiniteSpace::from_subbasis(filter_labels(filters, site.size()), opens);
}

FiniteSpace point_space_from_subbasis(const Site& site) {
  const auto filters = enumerate_prime_filters(site);
  check_point_count(filters.size());
  std::vector<ElemSet> subbasis;
  for (int c = 0; c < site.size(); ++c) {
    ElemSet b;
    for (std::size_t i = 0; i < filters.size(); ++i)
      if (filters[i].contains(c)) b.insert(static_cast<int>(i));
    subbasis.push_back(b);
  }
  return FiniteSpace::from_subbasis(filter_labels(filters, site.size()), subbasis);
}

FramePoints frame_points(const Frame& f) {
  FramePoints out;
  std::vector<std::string> labels;
  for (int p = 0; p < f.size(); ++p) {
    if (p == f.bottom()) continue;
    // the principal filter up(p) is completely prime iff p is join-prime
    bool prime = true;
    for (int x = 0; x < f.size() && prime; ++x)
      for (int y = x; y < f.size(); ++y)
        if (f.le(p, f.join(x, y)) && !f.le(p, x) && !f.le(p, y)) {
          prime = false;
          break;
        }
    if (prime) {
      out.generator.push_back(p);
      labels.push_back(f.element(p).to_string(f.width()));
    }
  }
  check_point_count(labels.size());
  std::vector<ElemSet> opens;
  for (int a = 0; a < f.size(); ++a) {
    ElemSet u;
    for (std::size_t i = 0; i < out.generator.size(); ++i)
      if (f.le(out.generator[i], a)) u.insert(static_cast<int>(i));
    opens.push_back(u);
  }
  out.space = FiniteSpace::from_opens(std::move(labels), std::move(opens));
  return out;
}

namespace {

using Signature = std::tuple<int, int, int>;

std::vector<Signature> signatures(const FiniteSpace& s) {
  std::vector<Signature> sig;
  for (int x = 0; x < s.size(); ++x) {
    int degree = 0;
    for (ElemSet u : s.opens())
      if (u.contains(x)) ++degree;
    sig.emplace_back(degree, s.neighbourhood(x).size(), s.closure(ElemSet::single(x)).size());
  }
  return sig;
}

struct IsoSearch {
  const FiniteSpace& x;
  const FiniteSpace& y;
  std::vector<Signature> sx, sy;
  std::vector<int> map;
  ElemSet used;

  bool extend(int k) {
    if (k == x.size()) return true;
    for (int cand = 0; cand < y.size(); ++cand) {
      if (used.contains(cand) || sx[static_cast<std::size_t>(k)] != sy[static_cast<std::size_t>(cand)]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int mj = map[static_cast<std::size_t>(j)];
        ok = x.specializes(k, j) == y.specializes(cand, mj) && x.specializes(j, k) == y.specializes(mj, cand);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(k)] = cand;
      used.insert(cand);
      if (extend(k + 1)) return true;
      used.erase(cand);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y, int cap) {
  if (x.size() > cap || y.size() > cap)
    throw ResourceError("homeomorphism search is capped at " + std::to_string(cap) + " points");
  if (x.size() != y.size() || x.opens().size() != y.opens().size()) return std::nullopt;
  IsoSearch s{x, y, signatures(x), signatures(y), std::vector<int>(static_cast<std::size_t>(x.size()), -1), {}};
  auto a = s.sx, b = s.sy;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  if (!s.extend(0)) return std::nullopt;
  // the specialization preorder determines a finite topology; confirm directly
  for (ElemSet u : x.opens()) {
    ElemSet image;
    for (int p : u) image.insert(s.map[static_cast<std::size_t>(p)]);
    if (!y.is_open(image)) return std::nullopt;
  }
  return s.map;
}

bool is_homeomorphic(const FiniteSpace& x, const FiniteSpace& y, int cap) {
  return find_homeomorphism(x, y, cap).has_value();
}

bool is_t0(const FiniteSpace& x) {
  for (int p = 0; p < x.size(); ++p)
    for (int q = p + 1; q < x.size(); ++q)
      if (x.neighbourhood(p) == x.neighbourhood(q) || (x.specializes(p, q) && x.specializes(q, p))) return false;
  return true;
}

bool is_sober(const FiniteSpace& x) {
  for (ElemSet u : x.opens()) {
    const ElemSet closed = x.all() - u;
    if (closed.empty()) continue;
    bool reducible = false;
    for (ElemSet v : x.opens()) {
      const ElemSet c1 = x.all() - v;
      if (!c1.subset_of(closed) || c1 == closed) continue;
      for (ElemSet w : x.opens()) {
        const ElemSet c2 = x.all() - w;
        if (c2.subset_of(closed) && c2 != closed && (c1 | c2) == closed) {
          reducible = true;
          break;
        }
      }
      if (reducible) break;
    }
    if (reducible) continue;
    int generic = 0;
    for (int p : closed)
      if (x.closure(ElemSet::single(p)) == closed) ++generic;
    if (generic != 1) return false;
  }
  return true;
}

bool is_spectral(const FiniteSpace& x) {
  if (!is_sober(x) || !is_t0(x)) return false;
  // On a finite space every open is quasicompact, so the compact opens are all
  // opens: they form a base and are closed under finite intersection.
  for (ElemSet u : x.opens())
    for (ElemSet v : x.opens())
      if (!x.is_open(u & v)) return false;
  for (int p = 0; p < x.size(); ++p)
    if (!x.is_open(x.neighbourhood(p))) return false;
  return true;
}

SpatialReport is_spatial(const Frame& f) {
  const FramePoints pts = frame_points(f);
  auto points_in = [&](int a) {
    ElemSet s;
    for (std::size_t i = 0; i < pts.generator.size(); ++i)
      if (f.le(pts.generator[i], a)) s.insert(static_cast<int>(i));
    return s;
  };
  SpatialReport r;
  for (int u = 0; u < f.size(); ++u)
    for (int v = 0; v < f.size(); ++v)
      if (f.le(u, v) != points_in(u).subset_of(points_in(v))) {
        r.witness = std::make_pair(u, v);
        return r;
      }
  r.spatial = true;
  return r;
}

bool is_continuous(const FiniteSpace& from, const FiniteSpace& to, const std::vector<int>& map) {
  for (ElemSet u : to.opens()) {
    ElemSet pre;
    for (int p = 0; p < from.size(); ++p)
      if (u.contains(map[static_cast<std::size_t>(p)])) pre.insert(p);
    if (!from.is_open(pre)) return false;
  }
  return true;
}

}  // namespace prosite
