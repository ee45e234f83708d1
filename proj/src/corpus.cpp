#include "prosite/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "prosite/error.hpp"
#include "prosite/kernels.hpp"

namespace prosite {

namespace {

// Plain modulo keeps streams identical across standard libraries.
int below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
bool chance(std::mt19937_64& rng, int percent) { return below(rng, 100) < percent; }

std::vector<std::string> element_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

int parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size() || v < 0 || v > (1LL << 30)) throw std::invalid_argument(value);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw InputError("corpus: bad value for " + key + " '" + value + "'");
  }
}

// Carry-less product of polynomials over F2 reduced modulo `modulus` of degree d.
int poly_mul(int a, int b, int modulus, int d) {
  int out = 0;
  for (int i = 0; i < d; ++i)
    if ((b >> i) & 1) out ^= a << i;
  for (int i = 2 * d - 2; i >= d; --i)
    if ((out >> i) & 1) out ^= modulus << (i - d);
  return out;
}

std::string poly_label(int bits) {
  if (bits == 0) return "0";
  std::string out;
  for (int i = 6; i >= 0; --i) {
    if (!((bits >> i) & 1)) continue;
    if (!out.empty()) out += "+";
    out += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

FiniteCommRing quotient_ring(int modulus, int d) {
  const int n = 1 << d;
  std::vector<std::string> labels;
  std::vector<int> add, mul;
  for (int a = 0; a < n; ++a) labels.push_back(poly_label(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add.push_back(a ^ b);
      mul.push_back(poly_mul(a, b, modulus, d));
    }
  return FiniteCommRing::from_tables(std::move(labels), std::move(add), std::move(mul));
}

}  // namespace

CorpusSpec parse_corpus_spec(const std::string& text) {
  CorpusSpec spec;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("corpus: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "seed") {
      try {
        std::size_t used = 0;
        spec.seed = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw InputError("corpus: bad value for seed '" + value + "'");
      }
    } else if (key == "max") {
      spec.max_elements = parse_number(key, value);
      if (spec.max_elements < 1 || spec.max_elements > kMaxElements)
        throw InputError("corpus: max must be 1..64, got '" + value + "'");
    } else if (key == "count") {
      spec.count = parse_number(key, value);
    } else if (key == "shape") {
      if (std::find(kShapes.begin(), kShapes.end(), value) == kShapes.end())
        throw InputError("corpus: unknown shape '" + value + "'");
      spec.shape = value;
    } else {
      throw InputError("corpus: unknown key '" + key + "'");
    }
  }
  return spec;
}

std::string corpus_spec_text(const CorpusSpec& spec) {
  std::string out = "seed=" + std::to_string(spec.seed) + ",max=" + std::to_string(spec.max_elements) +
                    ",count=" + std::to_string(spec.count);
  if (!spec.shape.empty()) out += ",shape=" + spec.shape;
  return out;
}

Proset random_proset(std::mt19937_64& rng, int n, int percent) {
  std::vector<std::pair<std::string, std::string>> pairs;
  const auto labels = element_labels(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && chance(rng, percent)) pairs.emplace_back(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]);
  return close_relation(labels, pairs);
}

Proset random_poset(std::mt19937_64& rng, int n, int percent) {
  std::vector<std::pair<std::string, std::string>> pairs;
  const auto labels = element_labels(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (chance(rng, percent)) pairs.emplace_back(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]);
  return close_relation(labels, pairs);
}

Proset random_lattice(std::mt19937_64& rng, int max_elements) {
  const int width = 1 + below(rng, 4);
  const ElemSet full = ElemSet::full(width);
  std::vector<ElemSet> chosen;
  const int wanted = below(rng, max_elements + 2);
  for (int i = 0; i < wanted; ++i) chosen.push_back(ElemSet(rng() & full.bits()));
  std::vector<ElemSet> family;
  for (;;) {
    family = {full};
    for (ElemSet s : chosen) family.push_back(s);
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        const ElemSet m = family[i] & family[j];
        if (std::find(family.begin(), family.end(), m) == family.end()) family.push_back(m);
      }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (static_cast<int>(family.size()) <= max_elements) break;
    chosen.pop_back();
  }
  const int n = static_cast<int>(family.size());
  std::vector<ElemSet> below_rows(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (family[static_cast<std::size_t>(a)].subset_of(family[static_cast<std::size_t>(b)]))
        below_rows[static_cast<std::size_t>(b)].insert(a);
  return Proset::from_rows(element_labels(n), std::move(below_rows));
}

namespace {

// gamma(c) = up(k(c)) where k(c) is the largest member of a join-closed set K
// below c; k is an interior operator, which makes gamma a packeting.
std::optional<std::vector<ElemSet>> interior_packeting(std::mt19937_64& rng, const Proset& p) {
  const int n = p.size();
  ElemSet k;
  for (int a = 0; a < n; ++a)
    if (p.up(a) == p.all() || chance(rng, 40)) k.insert(a);
  for (bool changed = true; changed;) {
    changed = false;
    for (int a : k)
      for (int b : k) {
        const ElemSet ups = p.up(a) & p.up(b);
        for (int u : ups)
          if (ups.subset_of(p.up(u)) && !k.contains(u)) {
            k.insert(u);
            changed = true;
          }
      }
  }
  std::vector<ElemSet> gamma;
  for (int c = 0; c < n; ++c) {
    const ElemSet under = k & p.down(c);
    std::optional<int> largest;
    for (int a : under)
      if (under.subset_of(p.down(a))) largest = a;
    if (!largest) return std::nullopt;
    gamma.push_back(p.up(*largest));
  }
  return gamma;
}

}  // namespace

Packeting random_packeting(std::mt19937_64& rng, const Proset& p, bool with_down) {
  const int n = p.size();
  const int t = *top(p);
  if (!with_down && chance(rng, 70)) {
    if (auto gamma = interior_packeting(rng, p)) {
      try {
        return validate_packeting(p, *gamma);
      } catch (const ValidationError&) {
      }
    }
  }
  std::vector<ElemSet> gamma(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    ElemSet g = ElemSet::single(c) | ElemSet::single(t);
    for (int a = 0; a < n; ++a)
      if (chance(rng, 10)) g.insert(a);
    if (with_down) g |= p.down(c);
    gamma[static_cast<std::size_t>(c)] = g;
  }
  // Grow until nested, contravariant and meet-closed.
  for (bool changed = true; changed;) {
    changed = false;
    auto grow = [&](int c, ElemSet extra) {
      ElemSet& g = gamma[static_cast<std::size_t>(c)];
      if (!extra.subset_of(g)) {
        g |= extra;
        changed = true;
      }
    };
    for (int c = 0; c < n; ++c) {
      for (int d : gamma[static_cast<std::size_t>(c)]) grow(c, gamma[static_cast<std::size_t>(d)]);
      for (int d : p.down(c)) grow(d, gamma[static_cast<std::size_t>(c)]);
      const ElemSet g = gamma[static_cast<std::size_t>(c)];
      for (int a : g)
        for (int b : g) grow(c, ElemSet::single(*meet(p, a, b)));
    }
  }
  try {
    return validate_packeting(p, gamma);
  } catch (const ValidationError&) {
    std::vector<ElemSet> whole(static_cast<std::size_t>(n), p.all());
    return validate_packeting(p, whole);
  }
}

std::vector<FiniteCommRing> table_rings() {
  return {quotient_ring(0b111, 2), quotient_ring(0b100, 2), quotient_ring(0b110, 2), quotient_ring(0b1000, 3)};
}

FiniteCommRing random_ring(std::mt19937_64& rng, int max_size) {
  max_size = std::max(max_size, 2);
  std::vector<std::string> descriptors;
  for (int n = 2; n <= max_size; ++n) descriptors.push_back("zmod " + std::to_string(n));
  for (int a = 2; a * 2 <= max_size; ++a)
    for (int b = 2; a * b <= max_size; ++b) descriptors.push_back("product zmod " + std::to_string(a) + " zmod " + std::to_string(b));
  const auto tables = table_rings();
  std::vector<FiniteCommRing> small;
  for (const auto& r : tables)
    if (r.size() <= max_size) small.push_back(r);
  const int pick = below(rng, static_cast<int>(descriptors.size() + small.size()));
  if (pick < static_cast<int>(descriptors.size())) return io::ring_from_descriptor(descriptors[static_cast<std::size_t>(pick)]);
  return small[static_cast<std::size_t>(pick) - descriptors.size()];
}

Instance generate_instance(const CorpusSpec& spec, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  const int max = spec.max_elements;
  Instance inst;
  inst.shape = spec.shape;
  if (spec.shape == "proset") {
    inst.proset = random_proset(rng, 1 + below(rng, max), 35);
  } else if (spec.shape == "site") {
    const Proset p = random_proset(rng, 1 + below(rng, max), 35);
    Coverage coverage;
    const int families = below(rng, 4);
    for (int k = 0; k < families; ++k) {
      const int c = below(rng, p.size());
      ElemSet gens;
      for (int d : p.down(c) - ElemSet::single(c))
        if (gens.size() < 3 && chance(rng, 50)) gens.insert(d);
      coverage.push_back({c, gens});
    }
    inst.site = io::SiteFile{saturate(p, coverage), std::nullopt};
  } else if (spec.shape == "packeted-site") {
    const Proset p = random_lattice(rng, max);
    const bool with_down = chance(rng, 30);
    Packeting pk = random_packeting(rng, p, with_down);
    Site site = saturate(p, packeting_coverage(pk));
    inst.site = io::SiteFile{std::move(site), std::move(pk)};
  } else if (spec.shape == "dlat") {
    const DistLattice d1 = downset_lattice(random_poset(rng, 1 + below(rng, std::min(max, 5)), 40));
    Cospan cs;
    cs.d0 = chain_lattice(2 + below(rng, 2));
    cs.d1 = downset_lattice(random_poset(rng, 1 + below(rng, 3), 40));
    cs.d2 = downset_lattice(random_poset(rng, 1 + below(rng, 2), 40));
    const auto h1 = lattice_homomorphisms(cs.d0, cs.d1);
    const auto h2 = lattice_homomorphisms(cs.d0, cs.d2);
    cs.f1 = h1[static_cast<std::size_t>(below(rng, static_cast<int>(h1.size())))];
    cs.f2 = h2[static_cast<std::size_t>(below(rng, static_cast<int>(h2.size())))];
    inst.lattice = d1;
    inst.cospan = std::move(cs);
  } else if (spec.shape == "ring") {
    inst.ring = random_ring(rng, max);
  } else if (spec.shape == "model") {
    if (below(rng, 3) < 2) {
      inst.model = affine_support_model(random_ring(rng, max));
    } else {
      const DistLattice d = downset_lattice(random_poset(rng, 1 + below(rng, 4), 40));
      inst.model = closed_support_model(spec_dlat(d).spectral);
    }
  } else {
    throw InputError("corpus: unknown shape '" + spec.shape + "'");
  }
  return inst;
}

std::vector<Instance> generate_corpus(const CorpusSpec& spec, int jobs) {
  std::vector<Instance> out(static_cast<std::size_t>(spec.count));
  kernels::for_each_index_parallel(spec.count, jobs,
                                   [&](int i) { out[static_cast<std::size_t>(i)] = generate_instance(spec, i); });
  return out;
}

std::string Instance::text() const {
  if (proset) return io::proset_text(*proset);
  if (site) return io::site_text(site->site, site->packeting);
  if (lattice) return io::lattice_text(*lattice);
  if (ring) return io::ring_text(*ring);
  if (model) return io::model_text(*model);
  return "";
}

io::json Instance::to_json() const {
  io::json j{{"shape", shape}, {"text", text()}};
  if (cospan)
    j["cospan"] = {{"d0", io::lattice_text(cospan->d0)},
                   {"d1", io::lattice_text(cospan->d1)},
                   {"d2", io::lattice_text(cospan->d2)},
                   {"f1", cospan->f1},
                   {"f2", cospan->f2}};
  return j;
}

}  // namespace prosite
