#include "prosite/ttg.hpp"

#include <algorithm>
#include <set>

#include "prosite/closure.hpp"
#include "prosite/error.hpp"
#include "prosite/stone.hpp"

namespace prosite {

namespace {

constexpr std::size_t kIdealLimit = std::size_t{1} << 20;

void ideal_overflow() { throw ResourceError("more than 2^20 ideals"); }

}  // namespace

MulSemigroup MulSemigroup::from_table(std::vector<std::string> labels, std::vector<int> mul) {
  const int n = static_cast<int>(labels.size());
  if (n == 0 || n > kMaxElements) throw InputError("semigroup size must be 1..64");
  if (mul.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw InputError("semigroup table has the wrong size");
  for (int v : mul)
    if (v < 0 || v >= n) throw InputError("semigroup table entry out of range");
  MulSemigroup s;
  s.labels_ = std::move(labels);
  s.mul_ = std::move(mul);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (s.mul(a, b) != s.mul(b, a))
        throw InputError("semigroup is not commutative at " + s.label(a) + "," + s.label(b));
      for (int c = 0; c < n; ++c)
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
          throw InputError("semigroup is not associative at " + s.label(a) + "," + s.label(b) + "," + s.label(c));
    }
  return s;
}

MulSemigroup MulSemigroup::of_ring(const FiniteCommRing& r) {
  MulSemigroup s;
  s.labels_ = r.labels();
  s.mul_ = r.mul_table();
  return s;
}

bool is_semigroup_ideal(const MulSemigroup& s, ElemSet i) {
  for (int a : i)
    for (int x = 0; x < s.size(); ++x)
      if (!i.contains(s.mul(a, x))) return false;
  return true;
}

std::vector<ElemSet> semigroup_ideals(const MulSemigroup& s) {
  auto close = [&](ElemSet seed) {
    ElemSet out = seed;
    for (int a : seed)
      for (int x = 0; x < s.size(); ++x) out.insert(s.mul(a, x));
    return out;
  };
  auto all = enumerate_closed_sets(s.all(), close, kIdealLimit, ideal_overflow);
  std::vector<ElemSet> out;
  for (ElemSet i : all)
    if (!i.empty() && i != s.all()) out.push_back(i);
  return out;
}

namespace {

void require_proper(const MulSemigroup& s, ElemSet i) {
  if (i.empty() || i == s.all() || !is_semigroup_ideal(s, i))
    throw ContractError("not a nonempty proper semigroup ideal");
}

}  // namespace

bool is_prime_pullback(const MulSemigroup& s, ElemSet i) {
  require_proper(s, i);
  const auto n = static_cast<std::size_t>(s.size());
  // Pullback of I -> R <- R x R: triples (k, x, y) with k in I and xy = k.
  std::vector<std::tuple<int, int, int>> pullback;
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      for (int k : i)
        if (s.mul(x, y) == k) pullback.emplace_back(k, x, y);
  std::vector<bool> image(n * n, false);
  for (const auto& [k, x, y] : pullback) image[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = true;
  std::vector<bool> sides(n * n, false);
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      sides[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = i.contains(x) || i.contains(y);
  return image == sides;
}

bool is_prime_direct(const MulSemigroup& s, ElemSet i) {
  require_proper(s, i);
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (i.contains(s.mul(x, y)) && !i.contains(x) && !i.contains(y)) return false;
  return true;
}

SupportModel SupportModel::make(SpectralSpace space, std::vector<std::string> labels, std::vector<ElemSet> supp,
                                int unit, int zero, std::optional<FiniteCommRing> ring) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw InputError("model has no objects");
  if (n > kMaxElements) throw ResourceError("model has more than 64 objects");
  if (supp.size() != labels.size()) throw InputError("model needs one support per object");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw InputError("duplicate object " + l);
  const FiniteSpace& x = space.space;
  SupportModel m;
  m.labels_ = std::move(labels);
  m.supp_ = std::move(supp);
  for (int a = 0; a < n; ++a)
    if (!m.supp(a).subset_of(x.all()) || !x.is_closed(m.supp(a)))
      throw InputError("support of " + m.label(a) + " is not closed");
  if (unit < 0 || unit >= n || m.supp(unit) != x.all()) throw InputError("unit object must have full support");
  if (zero < 0 || zero >= n || !m.supp(zero).empty()) throw InputError("zero object must have empty support");
  m.unit_ = unit;
  m.zero_ = zero;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (!m.with_support(m.supp(a) & m.supp(b)))
        throw InputError("no tensor product of " + m.label(a) + " and " + m.label(b));
  for (ElemSet open : x.opens()) {
    const ElemSet closed = x.all() - open;
    if (!m.with_support(closed)) throw InputError("closed set " + point_set_label(x, closed) + " is no support");
  }
  for (int p = 0; p < x.size(); ++p)
    for (int q = p + 1; q < x.size(); ++q) {
      bool separated = false;
      for (ElemSet s : m.supp_)
        if (s.contains(p) != s.contains(q)) separated = true;
      if (!separated) throw InputError("supports do not separate " + x.label(p) + " and " + x.label(q));
    }
  m.space_ = std::move(space);
  m.ring_ = std::move(ring);
  return m;
}

std::optional<int> SupportModel::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::optional<int> SupportModel::with_support(ElemSet s) const {
  for (int a = 0; a < size(); ++a)
    if (supp(a) == s) return a;
  return std::nullopt;
}

int SupportModel::tensor(int a, int b) const { return *with_support(supp(a) & supp(b)); }

namespace {

std::vector<ElemSet> closed_sets(const FiniteSpace& x) {
  std::vector<ElemSet> out;
  for (ElemSet open : x.opens()) out.push_back(x.all() - open);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SupportModel closed_support_model(const SpectralSpace& x) {
  auto closed = closed_sets(x.space);
  if (closed.size() > static_cast<std::size_t>(kMaxElements)) throw ResourceError("more than 64 closed sets");
  std::vector<std::string> labels;
  for (ElemSet c : closed) labels.push_back(point_set_label(x.space, c));
  const int zero = 0, unit = static_cast<int>(closed.size()) - 1;
  return SupportModel::make(x, std::move(labels), std::move(closed), unit, zero);
}

SupportModel affine_support_model(const FiniteCommRing& r) {
  RingSpectrum spec = spec_ring(r);
  const FiniteSpace& x = spec.spectral.space;
  auto closed = closed_sets(x);
  if (closed.size() > static_cast<std::size_t>(kMaxElements)) throw ResourceError("more than 64 closed sets");
  std::vector<std::string> labels;
  for (ElemSet c : closed) {
    if (c == x.all()) {
      labels.push_back("1");
    } else if (c.empty()) {
      labels.push_back("0");
    } else {
      std::string name = point_set_label(x, c);
      for (int f = 0; f < r.size(); ++f)
        if (x.all() - basic_open(spec, f) == c) {
          name = "cone(" + r.label(f) + ")";
          break;
        }
      labels.push_back(name);
    }
  }
  const int zero = 0, unit = static_cast<int>(closed.size()) - 1;
  return SupportModel::make(spec.spectral, std::move(labels), std::move(closed), unit, zero, r);
}

SupportModel permute_objects(const SupportModel& m, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(m.size())) throw InputError("permutation has the wrong length");
  std::vector<std::string> labels;
  std::vector<ElemSet> supp;
  int unit = -1, zero = -1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const int old = perm[i];
    labels.push_back(m.label(old));
    supp.push_back(m.supp(old));
    if (old == m.unit()) unit = static_cast<int>(i);
    if (old == m.zero()) zero = static_cast<int>(i);
  }
  return SupportModel::make(m.space(), std::move(labels), std::move(supp), unit, zero, m.ring());
}

ElemSet thick_ideal_generated(const SupportModel& m, ElemSet s) {
  ElemSet reach;
  for (int a : s) reach |= m.supp(a);
  ElemSet out;
  for (int b = 0; b < m.size(); ++b)
    if (m.supp(b).subset_of(reach)) out.insert(b);
  return out;
}

bool is_tensor_ideal(const SupportModel& m, ElemSet i) {
  return i.contains(m.zero()) && thick_ideal_generated(m, i) == i;
}

std::vector<ElemSet> tensor_ideals(const SupportModel& m) {
  return enumerate_closed_sets(m.all(), [&](ElemSet s) { return thick_ideal_generated(m, s); }, kIdealLimit,
                               ideal_overflow);
}

bool is_prime_tensor_ideal(const SupportModel& m, ElemSet i) {
  if (!is_tensor_ideal(m, i)) return false;
  if (i.contains(m.unit())) throw ContractError("primality asked of the improper ideal");
  for (int a = 0; a < m.size(); ++a)
    for (int b = a; b < m.size(); ++b)
      if (i.contains(m.tensor(a, b)) && !i.contains(a) && !i.contains(b)) return false;
  return true;
}

std::vector<ElemSet> prime_tensor_ideals(const SupportModel& m) {
  std::vector<ElemSet> out;
  for (ElemSet i : tensor_ideals(m))
    if (!i.contains(m.unit()) && is_prime_tensor_ideal(m, i)) out.push_back(i);
  return out;
}

BalmerSpectrum balmer_spectrum(const SupportModel& m) {
  BalmerSpectrum b;
  b.primes = prime_tensor_ideals(m);
  if (static_cast<int>(b.primes.size()) > kMaxSpacePoints) throw ResourceError("more than 16 prime tensor ideals");
  std::vector<std::string> labels;
  for (ElemSet p : b.primes) labels.push_back(p.to_string(m.size()));
  std::vector<ElemSet> subbasis;
  for (int a = 0; a < m.size(); ++a) {
    ElemSet u;
    for (std::size_t i = 0; i < b.primes.size(); ++i)
      if (b.primes[i].contains(a)) u.insert(static_cast<int>(i));
    subbasis.push_back(u);
  }
  b.space = FiniteSpace::from_subbasis(std::move(labels), subbasis);
  return b;
}

Proset kleq_proset(const SupportModel& m) {
  std::vector<ElemSet> below(static_cast<std::size_t>(m.size()));
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b)
      if (m.supp(b).subset_of(m.supp(a))) below[static_cast<std::size_t>(b)].insert(a);
  return Proset::from_rows(m.labels(), std::move(below));
}

namespace {

GammaAssignment gamma_on(const SupportModel& m, ElemSet carrier, const std::vector<ElemSet>& primes) {
  GammaAssignment g;
  g.proset = kleq_proset(m).induced(carrier, &g.objects);
  std::vector<int> local(static_cast<std::size_t>(m.size()), -1);
  for (std::size_t i = 0; i < g.objects.size(); ++i) local[static_cast<std::size_t>(g.objects[i])] = static_cast<int>(i);
  for (int k : g.objects) {
    ElemSet meet = m.all();
    for (ElemSet p : primes)
      if (p.contains(k)) meet &= p;
    ElemSet ids;
    for (int a : meet & carrier) ids.insert(local[static_cast<std::size_t>(a)]);
    g.gamma.push_back(ids);
  }
  return g;
}

}  // namespace

GammaAssignment gamma_assignment(const SupportModel& m) {
  auto primes = prime_tensor_ideals(m);
  ElemSet carrier;
  for (ElemSet p : primes) carrier |= p;
  return gamma_on(m, carrier, primes);
}

Packeting gamma_packeting(const SupportModel& m) {
  GammaAssignment g = gamma_assignment(m);
  return validate_packeting(g.proset, g.gamma);
}

GammaAssignment gamma_on_prime(const SupportModel& m, ElemSet prime) {
  return gamma_on(m, prime, prime_tensor_ideals(m));
}

Reconstruction reconstruct_space(const SupportModel& m) {
  Reconstruction rec;
  auto primes = prime_tensor_ideals(m);
  for (ElemSet p : primes) {
    bool maximal = true;
    for (ElemSet q : primes)
      if (q != p && p.subset_of(q)) maximal = false;
    if (maximal) rec.maximal_primes.push_back(p);
  }
  if (rec.maximal_primes.empty()) {
    rec.empty = true;
    rec.space = FiniteSpace::from_subbasis({}, {});
    return rec;
  }

  // piece point -> glued point, per piece
  std::vector<std::vector<int>> glue;
  for (ElemSet p : rec.maximal_primes) {
    GammaAssignment g = gamma_on(m, p, primes);
    Packeting pk = validate_packeting(g.proset, g.gamma);
    Coverage coverage = packeting_coverage(pk);
    std::vector<int> local(static_cast<std::size_t>(m.size()), -1);
    for (std::size_t i = 0; i < g.objects.size(); ++i)
      local[static_cast<std::size_t>(g.objects[i])] = static_cast<int>(i);
    // b = x (x) y with b in p: the members of {x, y} lying in p cover b.
    std::set<std::pair<int, std::uint64_t>> splits;
    for (int b : p)
      for (int x = 0; x < m.size(); ++x)
        for (int y = x; y < m.size(); ++y) {
          if ((m.supp(x) & m.supp(y)) != m.supp(b)) continue;
          ElemSet gens;
          if (p.contains(x)) gens.insert(local[static_cast<std::size_t>(x)]);
          if (p.contains(y)) gens.insert(local[static_cast<std::size_t>(y)]);
          splits.emplace(local[static_cast<std::size_t>(b)], gens.bits());
        }
    for (const auto& [root, bits] : splits) coverage.push_back({root, ElemSet(bits)});
    Site site = saturate(g.proset, coverage);
    FiniteSpace piece = point_space(site);
    auto filters = enumerate_prime_filters(site);
    std::vector<int> to_glued;
    for (ElemSet f : filters) {
      ElemSet objects;
      for (int i : f) objects.insert(g.objects[static_cast<std::size_t>(i)]);
      auto it = std::find(rec.points.begin(), rec.points.end(), objects);
      if (it == rec.points.end()) {
        rec.points.push_back(objects);
        to_glued.push_back(static_cast<int>(rec.points.size()) - 1);
      } else {
        to_glued.push_back(static_cast<int>(it - rec.points.begin()));
      }
    }
    glue.push_back(std::move(to_glued));
    rec.pieces.push_back(std::move(piece));
    rec.sites.push_back(std::move(site));
  }
  const int n = static_cast<int>(rec.points.size());
  if (n > kMaxSpacePoints) throw ResourceError("more than 16 reconstructed points");

  // Canonical point order: by object bitset.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rec.points[static_cast<std::size_t>(a)] < rec.points[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<ElemSet> sorted;
  for (int i : order) sorted.push_back(rec.points[static_cast<std::size_t>(i)]);
  rec.points = sorted;
  for (auto& g : glue)
    for (int& v : g) v = rank[static_cast<std::size_t>(v)];

  // Quotient topology of the disjoint union.
  std::vector<ElemSet> opens;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const ElemSet u(bits);
    bool open = true;
    for (std::size_t k = 0; k < glue.size() && open; ++k) {
      ElemSet pre;
      for (std::size_t i = 0; i < glue[k].size(); ++i)
        if (u.contains(glue[k][i])) pre.insert(static_cast<int>(i));
      open = rec.pieces[k].is_open(pre);
    }
    if (open) opens.push_back(u);
  }
  std::vector<std::string> labels;
  for (ElemSet s : rec.points) labels.push_back(s.to_string(m.size()));
  rec.space = FiniteSpace::from_opens(std::move(labels), std::move(opens));
  return rec;
}

ElemSet chi_c(const Reconstruction& rec, int a) {
  ElemSet out;
  for (std::size_t i = 0; i < rec.points.size(); ++i)
    if (!rec.points[i].contains(a)) out.insert(static_cast<int>(i));
  return out;
}

ElemSet ideal_of_open(const SupportModel& m, const Reconstruction& rec, ElemSet u) {
  if (!u.subset_of(rec.space.all()) || !rec.space.is_open(u)) throw ContractError("set is not open");
  ElemSet out;
  for (int a = 0; a < m.size(); ++a)
    if (!chi_c(rec, a).intersects(u)) out.insert(a);
  return out;
}

std::vector<int> spec_points(const SupportModel& m, const Reconstruction& rec) {
  std::vector<int> out;
  for (ElemSet f : rec.points) {
    int found = -1;
    for (int x = 0; x < m.space().space.size() && found < 0; ++x) {
      ElemSet px;
      for (int a = 0; a < m.size(); ++a)
        if (!m.supp(a).contains(x)) px.insert(a);
      if (px == f) found = x;
    }
    if (found < 0) throw ContractError("reconstructed point matches no point of the space");
    out.push_back(found);
  }
  return out;
}

Localization structure_ring(const SupportModel& m, const Reconstruction& rec, ElemSet u) {
  if (!m.ring()) throw UnsupportedError("structure rings need a model built from a ring");
  if (!u.subset_of(rec.space.all()) || !rec.space.is_open(u)) throw ContractError("set is not open");
  const FiniteCommRing& r = *m.ring();
  RingSpectrum spec = spec_ring(r);
  auto where = spec_points(m, rec);
  ElemSet target;
  for (int i : u) target.insert(where[static_cast<std::size_t>(i)]);
  ElemSet s;
  for (int f = 0; f < r.size(); ++f)
    if (target.subset_of(basic_open(spec, f))) s.insert(f);
  return localize_ring(r, s);
}

RingedSpace ringed_space(const SupportModel& m, const Reconstruction& rec) {
  RingedSpace rs;
  rs.space = rec.space;
  rs.opens = rec.space.opens();
  for (ElemSet u : rs.opens) rs.rings.push_back(structure_ring(m, rec, u));
  const int n = m.ring()->size();
  for (std::size_t i = 0; i < rs.opens.size(); ++i) {
    const Localization& from = rs.rings[i];
    // a fraction r/s for every class
    std::vector<std::pair<int, int>> rep(static_cast<std::size_t>(from.ring.size()), {-1, -1});
    for (int s : from.saturation)
      for (int r = 0; r < n; ++r) {
        auto& slot = rep[static_cast<std::size_t>(from.of(r, s, n))];
        if (slot.first < 0) slot = {r, s};
      }
    for (std::size_t j = 0; j < rs.opens.size(); ++j) {
      if (!rs.opens[j].subset_of(rs.opens[i])) continue;
      const Localization& to = rs.rings[j];
      RingedSpace::Restriction res;
      res.from = static_cast<int>(i);
      res.to = static_cast<int>(j);
      for (const auto& [r, s] : rep) res.map.push_back(to.of(r, s, n));
      rs.restrictions.push_back(std::move(res));
    }
  }
  return rs;
}

std::optional<std::string> presheaf_violation(const RingedSpace& rs) {
  auto find = [&](int i, int j) -> const RingedSpace::Restriction* {
    for (const auto& r : rs.restrictions)
      if (r.from == i && r.to == j) return &r;
    return nullptr;
  };
  const int k = static_cast<int>(rs.opens.size());
  for (const auto& r : rs.restrictions) {
    if (!is_ring_hom(rs.rings[static_cast<std::size_t>(r.from)].ring, rs.rings[static_cast<std::size_t>(r.to)].ring, r.map))
      return "restriction " + std::to_string(r.from) + "->" + std::to_string(r.to) + " is not a ring map";
    if (r.from == r.to)
      for (std::size_t x = 0; x < r.map.size(); ++x)
        if (r.map[x] != static_cast<int>(x)) return "restriction to itself is not the identity";
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        const auto* ab = find(a, b);
        const auto* bc = find(b, c);
        if (!ab || !bc) continue;
        const auto* ac = find(a, c);
        if (!ac) return "missing restriction";
        for (std::size_t x = 0; x < ab->map.size(); ++x)
          if (bc->map[static_cast<std::size_t>(ab->map[x])] != ac->map[x])
            return "restrictions do not compose at opens " + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c);
      }
  return std::nullopt;
}

void validate_model_map(const SupportModel& from, const SupportModel& to, const ModelMap& f) {
  if (f.image.size() != static_cast<std::size_t>(from.size()) ||
      f.space_map.size() != static_cast<std::size_t>(to.space().space.size()))
    throw InputError("model map has the wrong shape");
  for (int a = 0; a < from.size(); ++a) {
    const int b = f.image[static_cast<std::size_t>(a)];
    if (b < 0 || b >= to.size()) throw InputError("model map sends " + from.label(a) + " out of range");
    ElemSet pre;
    for (std::size_t z = 0; z < f.space_map.size(); ++z)
      if (from.supp(a).contains(f.space_map[z])) pre.insert(static_cast<int>(z));
    if (to.supp(b) != pre)
      throw ValidationError(0, from.label(a), "support of the image of " + from.label(a) + " is not the preimage");
  }
}

ModelMap model_map_of_ring_hom(const SupportModel& from, const SupportModel& to, const std::vector<int>& hom) {
  if (!from.ring() || !to.ring()) throw UnsupportedError("ring maps need models built from rings");
  if (!is_ring_hom(*from.ring(), *to.ring(), hom)) throw InputError("not a ring homomorphism");
  ModelMap f;
  f.space_map = spec_map(spec_ring(*from.ring()), spec_ring(*to.ring()), *from.ring(), hom);
  for (int a = 0; a < from.size(); ++a) {
    ElemSet pre;
    for (std::size_t z = 0; z < f.space_map.size(); ++z)
      if (from.supp(a).contains(f.space_map[z])) pre.insert(static_cast<int>(z));
    auto b = to.with_support(pre);
    if (!b) throw ContractError("no object supported on the preimage of " + from.label(a));
    f.image.push_back(*b);
  }
  validate_model_map(from, to, f);
  return f;
}

ModelMap compose(const ModelMap& g, const ModelMap& f) {
  ModelMap out;
  for (int b : f.image) out.image.push_back(g.image[static_cast<std::size_t>(b)]);
  for (int z : g.space_map) out.space_map.push_back(f.space_map[static_cast<std::size_t>(z)]);
  return out;
}

std::vector<int> functorial_map(const SupportModel& from, const SupportModel& to, const ModelMap& f,
                                const Reconstruction& rec_from, const Reconstruction& rec_to) {
  validate_model_map(from, to, f);
  std::vector<int> map;
  for (ElemSet q : rec_to.points) {
    ElemSet pre;
    for (int a = 0; a < from.size(); ++a)
      if (q.contains(f.image[static_cast<std::size_t>(a)])) pre.insert(a);
    auto it = std::find(rec_from.points.begin(), rec_from.points.end(), pre);
    if (it == rec_from.points.end()) throw ContractError("preimage of a point is not a point");
    map.push_back(static_cast<int>(it - rec_from.points.begin()));
  }
  if (!is_continuous(rec_to.space, rec_from.space, map)) throw ContractError("induced point map is not continuous");
  for (int a = 0; a < from.size(); ++a) {
    ElemSet pre;
    const ElemSet c = chi_c(rec_from, a);
    for (std::size_t z = 0; z < map.size(); ++z)
      if (c.contains(map[z])) pre.insert(static_cast<int>(z));
    if (chi_c(rec_to, f.image[static_cast<std::size_t>(a)]) != pre)
      throw ContractError("chi_c of the image of " + from.label(a) + " is not the preimage");
  }
  return map;
}

}  // namespace prosite
