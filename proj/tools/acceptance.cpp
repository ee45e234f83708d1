#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prosite/corpus.hpp"
#include "prosite/laws.hpp"
#include "prosite/ttg.hpp"

using namespace prosite;

namespace {

constexpr double kSemigroupSeconds = 10.0;
constexpr double kSiteSeconds = 120.0;
constexpr double kReconstructionSeconds = 60.0;
constexpr int kSites = 500;
constexpr int kPacketedSites = 200;
constexpr int kLattices = 200;
constexpr int kCospans = 200;
constexpr int kMaxSiteElements = 6;

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

Verdict laws_verdict(const std::vector<std::string>& ids, CorpusSpec spec, int jobs) {
  Verdict v;
  for (const auto& id : ids) {
    const LawReport r = check_law(find_law(id), spec, jobs);
    v.detail += (v.detail.empty() ? "" : "; ") + id + " " + std::to_string(r.applicable) + "/" +
                std::to_string(r.instances) + " applicable, " + std::to_string(r.failures.size()) + " failures";
    if (!r.ok()) {
      v.pass = false;
      v.detail += " (first: " + r.failures[0].message + ")";
    }
  }
  return v;
}

// Z/n localized at the elements outside every prime (q) with q in `qs`,
// built from fractions r/s with r ~ r' when t(rs' - r's) = 0 for some t in S.
FiniteCommRing localization_oracle(int n, const std::vector<int>& qs) {
  std::vector<int> dens;
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int q : qs) ok = ok && s % q != 0;
    if (ok) dens.push_back(s);
  }
  auto same = [&](int r, int s, int r2, int s2) {
    const int d = ((r * s2 - r2 * s) % n + n) % n;
    for (int t : dens)
      if (t * d % n == 0) return true;
    return false;
  };
  std::vector<std::pair<int, int>> reps;
  auto class_of = [&](int r, int s) {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (same(r, s, reps[i].first, reps[i].second)) return static_cast<int>(i);
    reps.emplace_back(r, s);
    return static_cast<int>(reps.size() - 1);
  };
  for (int r = 0; r < n; ++r)
    for (int s : dens) class_of(r, s);
  const int k = static_cast<int>(reps.size());
  std::vector<int> add(static_cast<std::size_t>(k * k)), mul(add.size());
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(std::to_string(reps[static_cast<std::size_t>(i)].first) + "/" +
                     std::to_string(reps[static_cast<std::size_t>(i)].second));
    for (int j = 0; j < k; ++j) {
      const auto [a, b] = reps[static_cast<std::size_t>(i)];
      const auto [c, d] = reps[static_cast<std::size_t>(j)];
      add[static_cast<std::size_t>(i * k + j)] = class_of((a * d + b * c) % n, b * d % n);
      mul[static_cast<std::size_t>(i * k + j)] = class_of(a * c % n, b * d % n);
    }
  }
  return FiniteCommRing::from_tables(labels, add, mul);
}

Verdict semigroup_primality() {
  Verdict v;
  const auto start = Clock::now();
  int ideals = 0, failures = 0;
  for (int n = 1; n <= 30; ++n) {
    const MulSemigroup s = MulSemigroup::of_ring(FiniteCommRing::zmod(n));
    for (ElemSet i : semigroup_ideals(s)) {
      ++ideals;
      if (is_prime_pullback(s, i) != is_prime_direct(s, i)) ++failures;
    }
  }
  const double t = seconds_since(start);
  v.pass = failures == 0 && t < kSemigroupSeconds;
  v.detail = "n=1..30, " + std::to_string(ideals) + " proper ideals, " + std::to_string(failures) + " disagreements, " +
             fmt_seconds(t) + " (limit " + fmt_seconds(kSemigroupSeconds) + ")";
  return v;
}

Verdict timed_laws(const std::vector<std::string>& ids, const CorpusSpec& spec, int jobs, double limit) {
  const auto start = Clock::now();
  Verdict v = laws_verdict(ids, spec, jobs);
  const double t = seconds_since(start);
  v.pass = v.pass && t < limit;
  v.detail += ", " + fmt_seconds(t) + " (limit " + fmt_seconds(limit) + ")";
  return v;
}

Verdict reconstruction_range() {
  Verdict v;
  const auto start = Clock::now();
  std::vector<int> bad;
  for (int n = 2; n <= 60; ++n) {
    const FiniteCommRing r = FiniteCommRing::zmod(n);
    const SupportModel m = affine_support_model(r);
    const FiniteSpace rec = reconstruct_space(m).space;
    const FiniteSpace bal = balmer_spectrum(m).space;
    const FiniteSpace zar = spec_ring(r).spectral.space;
    if (!is_homeomorphic(rec, bal) || !is_homeomorphic(bal, zar) || !is_homeomorphic(rec, zar)) bad.push_back(n);
  }
  const double t = seconds_since(start);
  v.pass = bad.empty() && t < kReconstructionSeconds;
  v.detail = "n=2..60, " + std::to_string(bad.size()) + " failures";
  for (int n : bad) v.detail += " " + std::to_string(n);
  v.detail += ", " + fmt_seconds(t) + " (limit " + fmt_seconds(kReconstructionSeconds) + ")";
  return v;
}

Verdict z12_structure_rings() {
  Verdict v;
  const FiniteCommRing r = FiniteCommRing::zmod(12);
  const SupportModel m = affine_support_model(r);
  const Reconstruction rec = reconstruct_space(m);
  const RingSpectrum spec = spec_ring(r);
  const std::vector<int> to_spec = spec_points(m, rec);
  auto open_at = [&](const std::string& prime) {
    ElemSet u;
    for (int i = 0; i < rec.space.size(); ++i)
      if (ideal_label(r, spec.primes[static_cast<std::size_t>(to_spec[static_cast<std::size_t>(i)])]) == prime)
        u.insert(i);
    return u;
  };
  struct Case {
    std::string name;
    ElemSet u;
    std::vector<int> qs;
    int order;
  };
  const std::vector<Case> cases{{"{(3)}", open_at("(3)"), {3}, 3},
                                {"{(2)}", open_at("(2)"), {2}, 4},
                                {"whole space", rec.space.all(), {2, 3}, 12}};
  for (const auto& c : cases) {
    const FiniteCommRing got = structure_ring(m, rec, c.u).ring;
    const FiniteCommRing want = localization_oracle(12, c.qs);
    const bool iso = find_ring_isomorphism(got, want).has_value();
    const bool global_ok = c.order != 12 || find_ring_isomorphism(got, r).has_value();
    const bool ok = rec.space.is_open(c.u) && got.size() == c.order && iso && global_ok;
    v.pass = v.pass && ok;
    v.detail += (v.detail.empty() ? "" : "; ") + c.name + " order " + std::to_string(got.size()) +
                (iso ? " matches oracle" : " differs from oracle");
  }
  return v;
}

Verdict stone_coincidence_rings() {
  Verdict v;
  const std::vector<std::pair<std::string, FiniteCommRing>> rings{
      {"Z/2", FiniteCommRing::zmod(2)},
      {"Z/2xZ/2", FiniteCommRing::product(FiniteCommRing::zmod(2), FiniteCommRing::zmod(2))},
      {"Z/3", FiniteCommRing::zmod(3)}};
  int failures = 0;
  for (const auto& [name, ring] : rings)
    for (int n = 1; n <= 4; ++n) {
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
      const Coincidence c = coincidence_on_stone(FiniteSpace::discrete(labels), ring);
      if (!c.coincide) {
        ++failures;
        v.detail += name + " on " + std::to_string(n) + " points: " + std::to_string(c.hochster) + " vs " +
                    std::to_string(c.boolean) + "; ";
      }
    }
  v.pass = failures == 0;
  v.detail += "3 rings x discrete spaces of 1..4 points, " + std::to_string(failures) + " failures";
  return v;
}

Verdict determinism(std::uint64_t seed, int jobs) {
  Verdict v;
  int compared = 0;
  for (const auto& law : laws()) {
    CorpusSpec s{seed, 5, 60, law.shape};
    if (law.shape == "ring" || law.shape == "model") s.max_elements = 30;
    const LawReport a = check_law(law, s, jobs);
    const LawReport b = check_law(law, s, jobs);
    const LawReport serial = check_law(law, s, 1);
    const std::string ja = a.to_json().dump(), jb = b.to_json().dump(), js = serial.to_json().dump();
    ++compared;
    if (ja != jb || ja != js || a.text() != b.text()) {
      v.pass = false;
      v.detail += law.id + " differs; ";
    }
  }
  v.detail += std::to_string(compared) + " laws run twice plus once serially, reports compared byte for byte";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance run: one PASS/FAIL line per criterion"};
  std::uint64_t seed = 20240601;
  int jobs = 0;
  app.add_option("--seed", seed, "corpus seed");
  app.add_option("--jobs", jobs, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  CLI11_PARSE(app, argc, argv);

  const CorpusSpec sites{seed, kMaxSiteElements, kSites, "site"};
  const CorpusSpec packeted{seed, kMaxSiteElements, kPacketedSites, "packeted-site"};
  const CorpusSpec lattices{seed, kMaxSiteElements, kLattices, "dlat"};
  const CorpusSpec cospans{seed + 1, kMaxSiteElements, kCospans, "dlat"};

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"semigroup primality: pullback agrees with direct test", semigroup_primality},
      {"prime filters are the points of the ideal frame",
       [&] { return timed_laws({"thm-1-1-1"}, sites, jobs, kSiteSeconds); }},
      {"packetings give stable coverages; down-set packets are retro-packeted",
       [&] { return laws_verdict({"prop-1-3-8", "prop-1-3-11"}, packeted, jobs); }},
      {"packeted sites: spatial, sober, coherent, finite-preserving maps",
       [&] { return laws_verdict({"lem-1-3-12", "lem-1-3-13", "lem-1-3-14"}, packeted, jobs); }},
      {"Stone round trips on finite distributive lattices",
       [&] { return laws_verdict({"thm-1-1-3"}, lattices, jobs); }},
      {"Spec sends lattice pushouts to pullbacks", [&] { return laws_verdict({"prop-1-1-5"}, cospans, jobs); }},
      {"reconstruction, Balmer spectrum and Zariski spectrum agree for Z/n", reconstruction_range},
      {"structure rings of Z/12", z12_structure_rings},
      {"Hochster and Boolean evaluations coincide on finite discrete spaces", stone_coincidence_rings},
      {"identical seeds give identical reports", [&] { return determinism(seed, jobs); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
