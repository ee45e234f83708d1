#include "prosite/site.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "prosite/closure.hpp"
#include "prosite/error.hpp"
#include "prosite/frame.hpp"

namespace prosite {

Site::Site(Proset p) : proset_(std::move(p)) {
  covers_.resize(static_cast<std::size_t>(proset_.size()));
  for (int c = 0; c < proset_.size(); ++c) covers_[static_cast<std::size_t>(c)].push_back(proset_.down(c));
}

Sieve sieve_generated(const Proset& p, int c, ElemSet gens) {
  for (int g : gens)
    if (!p.le(g, c))
      throw InputError("generator '" + p.label(g) + "' is not below '" + p.label(c) + "'");
  return Sieve{c, down_closure(p, gens)};
}

Sieve pullback_sieve(const Proset& p, const Sieve& r, int d) {
  if (!p.le(d, r.root))
    throw InputError("'" + p.label(d) + "' is not below sieve root '" + p.label(r.root) + "'");
  return Sieve{d, r.members & p.down(d)};
}

std::vector<ElemSet> all_sieves(const Proset& p, int c) {
  return enumerate_closed_sets(
      p.down(c), [&](ElemSet s) { return down_closure(p, s); },
      std::numeric_limits<std::size_t>::max(), [] {});
}

namespace {

// Sieve lattice of one root with a covering flag per sieve.
struct SieveTable {
  std::vector<ElemSet> sieves;
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<char> covering;

  bool covers(ElemSet s) const { return covering[index.at(s.bits())] != 0; }
  bool mark(ElemSet s) {
    char& f = covering[index.at(s.bits())];
    if (f) return false;
    f = 1;
    return true;
  }
};

}  // namespace

Site saturate(const Proset& p, const Coverage& coverage) {
  const int n = p.size();
  std::vector<SieveTable> tables(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    auto& t = tables[static_cast<std::size_t>(c)];
    t.sieves = all_sieves(p, c);
    for (std::size_t i = 0; i < t.sieves.size(); ++i) t.index.emplace(t.sieves[i].bits(), i);
    t.covering.assign(t.sieves.size(), 0);
  }
  for (const auto& fam : coverage) {
    const Sieve s = sieve_generated(p, fam.root, fam.generators);
    tables[static_cast<std::size_t>(fam.root)].mark(s.members);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // maximality
    for (int c = 0; c < n; ++c) changed |= tables[static_cast<std::size_t>(c)].mark(p.down(c));
    // stability
    for (int c = 0; c < n; ++c) {
      const auto& t = tables[static_cast<std::size_t>(c)];
      for (std::size_t i = 0; i < t.sieves.size(); ++i) {
        if (!t.covering[i]) continue;
        for (int d : p.down(c)) changed |= tables[static_cast<std::size_t>(d)].mark(t.sieves[i] & p.down(d));
      }
    }
    // transitivity
    for (int c = 0; c < n; ++c) {
      auto& t = tables[static_cast<std::size_t>(c)];
      for (std::size_t s = 0; s < t.sieves.size(); ++s) {
        if (t.covering[s]) continue;
        const ElemSet cand = t.sieves[s];
        for (std::size_t r = 0; r < t.sieves.size(); ++r) {
          if (!t.covering[r]) continue;
          bool locally = true;
          for (int d : t.sieves[r])
            if (!tables[static_cast<std::size_t>(d)].covers(cand & p.down(d))) {
              locally = false;
              break;
            }
          if (locally) {
            t.covering[s] = 1;
            changed = true;
            break;
          }
        }
      }
    }
  }

  Site site;
  site.proset_ = p;
  site.generators_ = coverage;
  site.covers_.resize(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    const auto& t = tables[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < t.sieves.size(); ++i)
      if (t.covering[i]) site.covers_[static_cast<std::size_t>(c)].push_back(t.sieves[i]);
  }
  return site;
}

bool is_covering(const Site& site, const Sieve& r) {
  const auto& cs = site.covers(r.root);
  return std::binary_search(cs.begin(), cs.end(), r.members);
}

std::optional<std::string> topology_violation(const Site& site) {
  const Proset& p = site.proset();
  for (int c = 0; c < p.size(); ++c) {
    if (!is_covering(site, {c, p.down(c)})) return "maximal sieve on " + p.label(c) + " does not cover";
    for (ElemSet r : site.covers(c))
      for (int d : p.down(c))
        if (!is_covering(site, {d, r & p.down(d)}))
          return "pullback of " + p.label_set(r) + " to " + p.label(d) + " does not cover";
    for (ElemSet s : all_sieves(p, c)) {
      if (is_covering(site, {c, s})) continue;
      for (ElemSet r : site.covers(c)) {
        bool locally = true;
        for (int d : r)
          if (!is_covering(site, {d, s & p.down(d)})) {
            locally = false;
            break;
          }
        if (locally) return "sieve " + p.label_set(s) + " on " + p.label(c) + " is locally covering but not covering";
      }
    }
  }
  return std::nullopt;
}

PrositeMapReport is_prosite_map(const ProsetMap& f, const Site& src, const Site& tgt) {
  PrositeMapReport r;
  r.flatness = is_flat_map(f);
  if (!r.flatness.flat) return r;
  const Proset& sp = src.proset();
  for (int c = 0; c < sp.size(); ++c)
    for (ElemSet cover : src.covers(c)) {
      const Sieve image{f(c), down_closure(tgt.proset(), f.apply(cover))};
      if (!is_covering(tgt, image)) {
        r.uncovered_image = Sieve{c, cover};
        return r;
      }
    }
  r.ok = true;
  return r;
}

namespace {

bool has_top_of(const Proset& p, ElemSet s) {
  for (int t : s)
    if (p.down(t) == p.all()) return true;
  return false;
}

// Some element of s is a P-meet of x and y.
bool has_meet_in(const Proset& p, ElemSet s, int x, int y) {
  const ElemSet lower = p.down(x) & p.down(y);
  for (int m : s & lower)
    if (lower.subset_of(p.down(m))) return true;
  return false;
}

bool contains_equivalent(const Proset& p, ElemSet s, int x) {
  for (int y : s)
    if (p.equivalent(x, y)) return true;
  return false;
}

}  // namespace

Packeting validate_packeting(const Proset& p, std::vector<ElemSet> gamma) {
  const auto completeness = is_finitely_complete(p);
  if (!completeness.complete) throw InputError("packeting base is not finitely complete");
  if (gamma.size() != static_cast<std::size_t>(p.size())) throw InputError("packeting is not total");
  auto g = [&](int c) { return gamma[static_cast<std::size_t>(c)]; };
  for (int c = 0; c < p.size(); ++c)
    if (!g(c).subset_of(p.all())) throw InputError("packet of '" + p.label(c) + "' leaves the carrier");

  for (int c = 0; c < p.size(); ++c)
    if (!g(c).contains(c))
      throw ValidationError(1, p.label(c), "packeting condition 1 fails: " + p.label(c) + " not in its packet");
  for (int c = 0; c < p.size(); ++c)
    for (int d : g(c))
      if (!g(d).subset_of(g(c)))
        throw ValidationError(2, p.label(c) + " " + p.label(d),
                              "packeting condition 2 fails: packet of " + p.label(d) + " not inside packet of " +
                                  p.label(c));
  for (int c = 0; c < p.size(); ++c) {
    if (!has_top_of(p, g(c)))
      throw ValidationError(3, p.label(c), "packeting condition 3 fails: packet of " + p.label(c) + " lacks the top");
    for (int x : g(c))
      for (int y : g(c))
        if (x < y && !has_meet_in(p, g(c), x, y))
          throw ValidationError(3, p.label(c) + " " + p.label(x) + " " + p.label(y),
                                "packeting condition 3 fails: packet of " + p.label(c) + " misses the meet of " +
                                    p.label(x) + " and " + p.label(y));
  }
  for (int c = 0; c < p.size(); ++c)
    for (int d : p.down(c))
      if (!g(c).subset_of(g(d)))
        throw ValidationError(4, p.label(c) + " " + p.label(d),
                              "packeting condition 4 fails: packet of " + p.label(c) + " not inside packet of " +
                                  p.label(d));
  Packeting pk;
  pk.base_ = p;
  pk.gamma_ = std::move(gamma);
  return pk;
}

ElemSet packet_sieve(const Proset& p, int a, int c) { return p.down(a) & p.down(c); }

Coverage packeting_coverage(const Packeting& pk) {
  const Proset& p = pk.base();
  Coverage out;
  for (int c = 0; c < p.size(); ++c)
    for (int a : pk.gamma(c)) {
      const auto m = meet(p, a, c);
      // S_{a,c} is principal on a ^ c
      out.push_back({c, ElemSet::single(*m)});
    }
  return out;
}

std::optional<std::tuple<int, int, int>> stability_violation(const Packeting& pk) {
  const Proset& p = pk.base();
  for (int c = 0; c < p.size(); ++c)
    for (int a : pk.gamma(c))
      for (int d : p.down(c)) {
        const Sieve pulled = pullback_sieve(p, {c, packet_sieve(p, a, c)}, d);
        const int delta = *meet(p, *meet(p, a, c), d);
        if (pulled.members != packet_sieve(p, delta, d) || !contains_equivalent(p, pk.gamma(d), delta))
          return std::make_tuple(a, c, d);
      }
  return std::nullopt;
}

Proset product_proset(const Proset& a, const Proset& b, std::vector<int>* first, std::vector<int>* second) {
  if (a.size() * b.size() > kMaxElements) throw ResourceError("product proset exceeds 64 elements");
  std::vector<std::string> labels;
  std::vector<int> f, s;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
      f.push_back(i);
      s.push_back(j);
    }
  std::vector<ElemSet> below(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = 0; y < labels.size(); ++y)
      if (a.le(f[y], f[x]) && b.le(s[y], s[x])) below[x].insert(static_cast<int>(y));
  if (first) *first = f;
  if (second) *second = s;
  return Proset::from_rows(std::move(labels), std::move(below));
}

ProductPacketing product_packeting(const Packeting& a, const Packeting& b) {
  ProductPacketing out;
  out.proset = product_proset(a.base(), b.base(), &out.first, &out.second);
  std::vector<ElemSet> gamma(static_cast<std::size_t>(out.proset.size()));
  for (int x = 0; x < out.proset.size(); ++x)
    for (int y = 0; y < out.proset.size(); ++y)
      if (a.gamma(out.first[static_cast<std::size_t>(x)]).contains(out.first[static_cast<std::size_t>(y)]) &&
          b.gamma(out.second[static_cast<std::size_t>(x)]).contains(out.second[static_cast<std::size_t>(y)]))
        gamma[static_cast<std::size_t>(x)].insert(y);
  out.packeting = validate_packeting(out.proset, std::move(gamma));
  return out;
}

RetroReport is_retro_packeted(const Site& site, const Packeting& pk) {
  if (!(site.proset() == pk.base()) || !(saturate(pk.base(), packeting_coverage(pk)) == site))
    throw InputError("site topology is not the one generated by the packeting");
  const Frame frame = frame_of_ideals(site);
  const auto finite = finite_elements(frame);
  RetroReport r;
  for (int u : finite) {
    const ElemSet U = frame.element(u);
    for (int v = 0; v < frame.size(); ++v) {
      const ElemSet V = frame.element(v);
      if (!V.subset_of(U)) continue;
      const ElemSet complement = ideal_closure(site, U - V);
      for (int w = 0; w < frame.size(); ++w) {
        const ElemSet W = frame.element(w);
        if (!W.subset_of(V) || W == V) continue;
        if ((complement | W) == U) {
          r.witness = std::make_tuple(U, V, W);
          return r;
        }
      }
    }
  }
  r.retro = true;
  return r;
}

}  // namespace prosite
