#include "prosite/ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

#include "prosite/closure.hpp"
#include "prosite/error.hpp"

namespace prosite {

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

}  // namespace

FiniteCommRing FiniteCommRing::from_tables(std::vector<std::string> labels, std::vector<int> add, std::vector<int> mul) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw InputError("ring has no elements");
  if (n > kMaxElements) throw InputError("ring has " + std::to_string(n) + " elements; at most 64 are supported");
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (add.size() != nn || mul.size() != nn) throw InputError("ring tables must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < nn; ++i)
    if (add[i] < 0 || add[i] >= n || mul[i] < 0 || mul[i] >= n) throw InputError("ring table entry out of range");
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw InputError("duplicate ring element '" + labels[i] + "'");

  FiniteCommRing r;
  r.labels_ = std::move(labels);
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  auto fail = [&](const std::string& what, int a, int b, int c) {
    throw InputError("ring tables violate " + what + " at (" + r.label(a) + ", " + r.label(b) + ", " + r.label(c) + ")");
  };

  int zero = -1, one = -1;
  for (int e = 0; e < n && zero < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = r.add(e, a) == a && r.add(a, e) == a;
    if (ok) zero = e;
  }
  for (int e = 0; e < n && one < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = r.mul(e, a) == a && r.mul(a, e) == a;
    if (ok) one = e;
  }
  if (zero < 0) throw InputError("ring tables have no additive identity");
  if (one < 0) throw InputError("ring tables have no multiplicative identity");
  r.zero_ = zero;
  r.one_ = one;

  r.neg_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.add(a, b) == zero) {
        r.neg_[static_cast<std::size_t>(a)] = b;
        break;
      }
  for (int a = 0; a < n; ++a)
    if (r.neg(a) < 0) fail("additive inverses", a, a, a);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) fail("commutativity of addition", a, b, b);
      if (r.mul(a, b) != r.mul(b, a)) fail("commutativity of multiplication", a, b, b);
      for (int c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) fail("associativity of addition", a, b, c);
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) fail("associativity of multiplication", a, b, c);
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) fail("distributivity", a, b, c);
      }
    }
  return r;
}

FiniteCommRing FiniteCommRing::zmod(int n) {
  if (n < 1 || n > kMaxElements) throw InputError("zmod needs a modulus between 1 and 64, got " + std::to_string(n));
  std::vector<std::string> labels;
  std::vector<int> add, mul;
  for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add.push_back((a + b) % n);
      mul.push_back((a * b) % n);
    }
  FiniteCommRing r = from_tables(std::move(labels), std::move(add), std::move(mul));
  r.descriptor_ = "zmod " + std::to_string(n);
  return r;
}

FiniteCommRing FiniteCommRing::product(const FiniteCommRing& a, const FiniteCommRing& b) {
  const int n = a.size() * b.size();
  if (n > kMaxElements) throw InputError("product ring would have " + std::to_string(n) + " elements; at most 64 are supported");
  auto pair = [&](int x, int y) { return x * b.size() + y; };
  std::vector<std::string> labels;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  std::vector<int> add, mul;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int x1 = i / b.size(), y1 = i % b.size(), x2 = j / b.size(), y2 = j % b.size();
      add.push_back(pair(a.add(x1, x2), b.add(y1, y2)));
      mul.push_back(pair(a.mul(x1, x2), b.mul(y1, y2)));
    }
  FiniteCommRing r = from_tables(std::move(labels), std::move(add), std::move(mul));
  r.descriptor_ = "product " + a.descriptor_ + " " + b.descriptor_;
  return r;
}

std::optional<int> FiniteCommRing::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  return std::nullopt;
}

bool FiniteCommRing::is_unit(int a) const {
  for (int b = 0; b < size(); ++b)
    if (mul(a, b) == one_) return true;
  return false;
}

namespace {

ElemSet additive_closure(const FiniteCommRing& r, ElemSet s) {
  s.insert(r.zero());
  for (;;) {
    ElemSet next = s;
    for (int a : s)
      for (int b : s) next.insert(r.add(a, b));
    if (next == s) return s;
    s = next;
  }
}

}  // namespace

std::vector<ElemSet> additive_subgroups(const FiniteCommRing& r) {
  return enumerate_closed_sets(
      r.all(), [&](ElemSet s) { return additive_closure(r, s); }, kUnbounded, [] {});
}

std::vector<ElemSet> ring_ideals(const FiniteCommRing& r) {
  std::vector<ElemSet> out;
  for (ElemSet g : additive_subgroups(r)) {
    bool absorbing = true;
    for (int a : g) {
      for (int x = 0; x < r.size() && absorbing; ++x) absorbing = g.contains(r.mul(x, a));
      if (!absorbing) break;
    }
    if (absorbing) out.push_back(g);
  }
  return out;
}

ElemSet ideal_generated(const FiniteCommRing& r, ElemSet gens) {
  ElemSet s = gens;
  s.insert(r.zero());
  for (;;) {
    ElemSet next = s;
    for (int a : s) {
      for (int b : s) next.insert(r.add(a, b));
      for (int x = 0; x < r.size(); ++x) next.insert(r.mul(x, a));
    }
    if (next == s) return s;
    s = next;
  }
}

bool is_prime_ideal(const FiniteCommRing& r, ElemSet ideal) {
  if (ideal.contains(r.one())) return false;
  if (ideal_generated(r, ideal) != ideal) return false;
  for (int a = 0; a < r.size(); ++a) {
    if (ideal.contains(a)) continue;
    for (int b = 0; b < r.size(); ++b)
      if (!ideal.contains(b) && ideal.contains(r.mul(a, b))) return false;
  }
  return true;
}

std::vector<ElemSet> prime_ideals(const FiniteCommRing& r) {
  std::vector<ElemSet> out;
  for (ElemSet i : ring_ideals(r))
    if (is_prime_ideal(r, i)) out.push_back(i);
  return out;
}

std::string ideal_label(const FiniteCommRing& r, ElemSet ideal) {
  for (int x : ideal)
    if (ideal_generated(r, ElemSet::single(x)) == ideal) return "(" + r.label(x) + ")";
  ElemSet gens;
  for (int x : ideal)
    if (!ideal_generated(r, gens).contains(x)) gens.insert(x);
  std::string out = "(";
  for (int x : gens) out += (out.size() > 1 ? "," : "") + r.label(x);
  return out + ")";
}

SpectralSpace make_spectral(FiniteSpace space, std::vector<ElemSet> base) {
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (!is_spectral(space)) throw ContractError("space is not spectral");
  auto in_base = [&](ElemSet s) { return std::binary_search(base.begin(), base.end(), s); };
  if (!in_base(space.all())) throw ContractError("base must contain the whole space");
  for (ElemSet a : base) {
    if (!space.is_open(a)) throw ContractError("base member is not open");
    for (ElemSet b : base)
      if (!in_base(a & b)) throw ContractError("base is not closed under finite intersection");
  }
  for (ElemSet u : space.opens()) {
    ElemSet covered;
    for (ElemSet a : base)
      if (a.subset_of(u)) covered |= a;
    if (covered != u) throw ContractError("base does not generate the topology");
  }
  return SpectralSpace{std::move(space), std::move(base)};
}

RingSpectrum spec_ring(const FiniteCommRing& r) {
  if (r.is_zero_ring()) throw ContractError("the zero ring has empty spectrum");
  RingSpectrum out;
  out.primes = prime_ideals(r);
  std::vector<std::string> labels;
  for (ElemSet p : out.primes) labels.push_back(ideal_label(r, p));
  std::vector<ElemSet> base;
  for (int f = 0; f < r.size(); ++f) {
    ElemSet d;
    for (std::size_t i = 0; i < out.primes.size(); ++i)
      if (!out.primes[i].contains(f)) d.insert(static_cast<int>(i));
    base.push_back(d);
  }
  FiniteSpace space = FiniteSpace::from_subbasis(std::move(labels), base);
  out.spectral = make_spectral(std::move(space), std::move(base));
  return out;
}

ElemSet basic_open(const RingSpectrum& s, int f) {
  ElemSet d;
  for (std::size_t i = 0; i < s.primes.size(); ++i)
    if (!s.primes[i].contains(f)) d.insert(static_cast<int>(i));
  return d;
}

ElemSet multiplicative_closure(const FiniteCommRing& r, ElemSet s) {
  s.insert(r.one());
  for (;;) {
    ElemSet next = s;
    for (int a : s)
      for (int b : s) next.insert(r.mul(a, b));
    if (next == s) return s;
    s = next;
  }
}

Localization localize_ring(const FiniteCommRing& r, ElemSet s) {
  if (!s.subset_of(r.all())) throw InputError("denominator set references an element outside the ring");
  const int n = r.size();
  Localization out;
  out.saturation = multiplicative_closure(r, s);
  out.zero_ring = out.saturation.contains(r.zero());

  std::vector<int> denominators{r.one()};
  for (int d : out.saturation)
    if (d != r.one()) denominators.push_back(d);

  auto equivalent = [&](int r1, int s1, int r2, int s2) {
    const int diff = r.sub(r.mul(r1, s2), r.mul(r2, s1));
    for (int u : out.saturation)
      if (r.mul(u, diff) == r.zero()) return true;
    return false;
  };

  std::vector<std::pair<int, int>> reps;
  out.fraction.assign(static_cast<std::size_t>(n * n), -1);
  for (int d : denominators)
    for (int x = 0; x < n; ++x) {
      int cls = -1;
      for (std::size_t k = 0; k < reps.size() && cls < 0; ++k)
        if (equivalent(x, d, reps[k].first, reps[k].second)) cls = static_cast<int>(k);
      if (cls < 0) {
        cls = static_cast<int>(reps.size());
        reps.emplace_back(x, d);
      }
      out.fraction[static_cast<std::size_t>(x * n + d)] = cls;
    }

  const int m = static_cast<int>(reps.size());
  std::vector<std::string> labels;
  for (auto [x, d] : reps) labels.push_back(d == r.one() ? r.label(x) : r.label(x) + "/" + r.label(d));
  std::vector<int> add, mul;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [x1, d1] = reps[static_cast<std::size_t>(i)];
      auto [x2, d2] = reps[static_cast<std::size_t>(j)];
      const int den = r.mul(d1, d2);
      add.push_back(out.of(r.add(r.mul(x1, d2), r.mul(x2, d1)), den, n));
      mul.push_back(out.of(r.mul(x1, x2), den, n));
    }
  out.ring = FiniteCommRing::from_tables(std::move(labels), std::move(add), std::move(mul));
  for (int x = 0; x < n; ++x) out.canonical.push_back(out.of(x, r.one(), n));
  return out;
}

bool is_ring_hom(const FiniteCommRing& from, const FiniteCommRing& to, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != from.size()) return false;
  for (int v : f)
    if (v < 0 || v >= to.size()) return false;
  auto at = [&](int i) { return f[static_cast<std::size_t>(i)]; };
  if (at(from.one()) != to.one()) return false;
  for (int a = 0; a < from.size(); ++a)
    for (int b = 0; b < from.size(); ++b)
      if (at(from.add(a, b)) != to.add(at(a), at(b)) || at(from.mul(a, b)) != to.mul(at(a), at(b))) return false;
  return true;
}

std::vector<int> reduction_hom(int n, int m) {
  if (m < 1 || n < 1 || n % m != 0) throw InputError("zmod " + std::to_string(m) + " is not a quotient of zmod " + std::to_string(n));
  std::vector<int> f;
  for (int a = 0; a < n; ++a) f.push_back(a % m);
  return f;
}

std::vector<int> spec_map(const RingSpectrum& from_spec, const RingSpectrum& to_spec, const FiniteCommRing& from,
                          const std::vector<int>& f) {
  std::vector<int> out;
  for (ElemSet q : to_spec.primes) {
    ElemSet pre;
    for (int a = 0; a < from.size(); ++a)
      if (q.contains(f[static_cast<std::size_t>(a)])) pre.insert(a);
    auto it = std::find(from_spec.primes.begin(), from_spec.primes.end(), pre);
    if (it == from_spec.primes.end()) throw ContractError("preimage of a prime is not prime; map is not a ring homomorphism");
    out.push_back(static_cast<int>(it - from_spec.primes.begin()));
  }
  return out;
}

namespace {

using RingSignature = std::tuple<int, bool, bool, int, int>;

std::vector<RingSignature> ring_signatures(const FiniteCommRing& r) {
  std::vector<RingSignature> out;
  for (int a = 0; a < r.size(); ++a) {
    int order = 1;
    for (int x = a; x != r.zero(); x = r.add(x, a)) ++order;
    if (a == r.zero()) order = 1;
    int annihilator = 0, square_roots = 0;
    for (int x = 0; x < r.size(); ++x) {
      if (r.mul(a, x) == r.zero()) ++annihilator;
      if (r.mul(x, x) == a) ++square_roots;
    }
    out.emplace_back(order, r.is_idempotent(a), r.is_unit(a), annihilator, square_roots);
  }
  return out;
}

struct RingIsoSearch {
  const FiniteCommRing& a;
  const FiniteCommRing& b;
  std::vector<RingSignature> sa, sb;
  std::vector<int> map, used;

  bool consistent(int x) const {
    auto at = [&](int i) { return map[static_cast<std::size_t>(i)]; };
    for (int y = 0; y < a.size(); ++y) {
      if (at(y) < 0) continue;
      const int s = a.add(x, y), p = a.mul(x, y);
      if (at(s) >= 0 && at(s) != b.add(at(x), at(y))) return false;
      if (at(p) >= 0 && at(p) != b.mul(at(x), at(y))) return false;
      for (int z = 0; z < a.size(); ++z) {
        if (at(z) < 0) continue;
        if (a.add(y, z) == x && b.add(at(y), at(z)) != at(x)) return false;
        if (a.mul(y, z) == x && b.mul(at(y), at(z)) != at(x)) return false;
      }
    }
    return true;
  }

  bool extend(int x) {
    if (x == a.size()) return true;
    for (int c = 0; c < b.size(); ++c) {
      if (used[static_cast<std::size_t>(c)] || sa[static_cast<std::size_t>(x)] != sb[static_cast<std::size_t>(c)]) continue;
      map[static_cast<std::size_t>(x)] = c;
      used[static_cast<std::size_t>(c)] = 1;
      if (consistent(x) && extend(x + 1)) return true;
      used[static_cast<std::size_t>(c)] = 0;
      map[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_ring_isomorphism(const FiniteCommRing& a, const FiniteCommRing& b) {
  if (a.size() != b.size()) return std::nullopt;
  RingIsoSearch s{a, b, ring_signatures(a), ring_signatures(b), std::vector<int>(static_cast<std::size_t>(a.size()), -1),
                  std::vector<int>(static_cast<std::size_t>(b.size()), 0)};
  auto sorted_a = s.sa, sorted_b = s.sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;
  if (!s.extend(0)) return std::nullopt;
  if (!is_ring_hom(a, b, s.map)) return std::nullopt;
  return s.map;
}

}  // namespace prosite
