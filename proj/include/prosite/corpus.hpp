#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prosite/io.hpp"

namespace prosite {

inline const std::vector<std::string> kShapes{"proset", "site", "packeted-site", "dlat", "ring", "model"};

struct CorpusSpec {
  std::uint64_t seed = 0;
  int max_elements = 6;  // carrier bound; for ring and model shapes it bounds the ring size
  int count = 100;
  std::string shape;     // empty: the law's own shape
};
// "seed=42,max=6,count=500[,shape=site]"; unknown keys are input errors.
CorpusSpec parse_corpus_spec(const std::string& text);
std::string corpus_spec_text(const CorpusSpec& spec);

// A cospan D1 <- D0 -> D2 drawn alongside a lattice instance; kept small so
// the pushout stays within 64 elements.
struct Cospan {
  DistLattice d0, d1, d2;
  std::vector<int> f1, f2;
};

struct Instance {
  std::string shape;
  std::optional<Proset> proset;
  std::optional<io::SiteFile> site;  // site and packeted-site shapes
  std::optional<DistLattice> lattice;
  std::optional<Cospan> cospan;
  std::optional<FiniteCommRing> ring;
  std::optional<SupportModel> model;

  // The instance in its input text format.
  std::string text() const;
  io::json to_json() const;
};

// Instance `index` depends only on (seed, index, max, shape).
Instance generate_instance(const CorpusSpec& spec, int index);
std::vector<Instance> generate_corpus(const CorpusSpec& spec, int jobs = 1);

// Building blocks, also used by tests.
Proset random_proset(std::mt19937_64& rng, int n, int percent);
Proset random_poset(std::mt19937_64& rng, int n, int percent);
// Finite lattice given as an intersection-closed family ordered by inclusion.
Proset random_lattice(std::mt19937_64& rng, int max_elements);
// Valid packeting on a finitely complete proset; `with_down` forces
// gamma(c) to contain down(c).
Packeting random_packeting(std::mt19937_64& rng, const Proset& p, bool with_down);
FiniteCommRing random_ring(std::mt19937_64& rng, int max_size);
// Small rings given by tables: F4, F2[x]/(x^2), F2[x]/(x^2+x), F2[x]/(x^3).
std::vector<FiniteCommRing> table_rings();

}  // namespace prosite
