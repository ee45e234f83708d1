#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prosite/elemset.hpp"
#include "prosite/order.hpp"

namespace prosite {

// In a proset there is at most one arrow d -> c, so a sieve on c is just a
// down-closed subset of down(c).
struct Sieve {
  int root = 0;
  ElemSet members;

  bool operator==(const Sieve&) const = default;
};

// One generating family of a coverage: `generators` is meant to cover `root`.
struct CoverFamily {
  int root = 0;
  ElemSet generators;

  bool operator==(const CoverFamily&) const = default;
};
using Coverage = std::vector<CoverFamily>;

// A proset with a Grothendieck topology. Covering sieves are stored per root
// in increasing bit order.
class Site {
 public:
  Site() = default;
  // Trivial topology: only maximal sieves cover.
  explicit Site(Proset p);

  const Proset& proset() const { return proset_; }
  int size() const { return proset_.size(); }
  const std::vector<ElemSet>& covers(int c) const { return covers_[static_cast<std::size_t>(c)]; }
  // Coverage the site was saturated from, kept for serialization.
  const Coverage& generators() const { return generators_; }

  bool operator==(const Site& o) const { return proset_ == o.proset_ && covers_ == o.covers_; }

 private:
  friend Site saturate(const Proset& p, const Coverage& coverage);
  Proset proset_;
  std::vector<std::vector<ElemSet>> covers_;
  Coverage generators_;
};

// Throws InputError when a generator is not below c.
Sieve sieve_generated(const Proset& p, int c, ElemSet gens);
// Restriction of r to down(d); throws InputError unless d <= root.
Sieve pullback_sieve(const Proset& p, const Sieve& r, int d);

// Every sieve on c, in increasing bit order.
std::vector<ElemSet> all_sieves(const Proset& p, int c);

// Least Grothendieck topology containing every generated family. Rules are
// applied in the fixed order maximality, stability, transitivity until
// nothing changes.
Site saturate(const Proset& p, const Coverage& coverage);

bool is_covering(const Site& site, const Sieve& r);

// Exhaustive check of the three topology axioms; returns a description of the
// first violation, if any.
std::optional<std::string> topology_violation(const Site& site);

struct PrositeMapReport {
  bool ok = false;
  FlatnessReport flatness;
  // a covering sieve of the source whose image does not generate a cover
  std::optional<Sieve> uncovered_image;
};
PrositeMapReport is_prosite_map(const ProsetMap& f, const Site& src, const Site& tgt);

// Packeting: gamma[c] is the packet assigned to c.
class Packeting {
 public:
  const Proset& base() const { return base_; }
  ElemSet gamma(int c) const { return gamma_[static_cast<std::size_t>(c)]; }
  const std::vector<ElemSet>& gammas() const { return gamma_; }

 private:
  friend Packeting validate_packeting(const Proset& p, std::vector<ElemSet> gamma);
  Proset base_;
  std::vector<ElemSet> gamma_;
};

// Checks, in order: (1) c in gamma(c); (2) d in gamma(c) => gamma(d) subset
// gamma(c); (3) gamma(c) finitely complete with the inclusion preserving top
// and binary meets; (4) contravariance, d <= c => gamma(c) subset gamma(d).
// Throws ValidationError(condition, witness) on the first failure and
// InputError when p itself is not finitely complete.
Packeting validate_packeting(const Proset& p, std::vector<ElemSet> gamma);

// S^gamma: for every c and a in gamma(c) the family generated by meet(a, c).
Coverage packeting_coverage(const Packeting& pk);
// Members of S^gamma_{a,c} = { d <= c : d <= a }.
ElemSet packet_sieve(const Proset& p, int a, int c);

// Pullback of S_{a,c} along d <= c equals S_{delta,d}, delta = (a ^ c) ^ d.
// Returns the first (a, c, d) where it does not.
std::optional<std::tuple<int, int, int>> stability_violation(const Packeting& pk);

// Pointwise product packeting on the product proset.
struct ProductPacketing {
  Proset proset;
  Packeting packeting;
  std::vector<int> first;   // projection onto the left factor
  std::vector<int> second;  // projection onto the right factor
};
Proset product_proset(const Proset& a, const Proset& b, std::vector<int>* first = nullptr,
                      std::vector<int>* second = nullptr);
ProductPacketing product_packeting(const Packeting& a, const Packeting& b);

struct RetroReport {
  bool retro = false;
  // counterexample ideals (U, V, W)
  std::optional<std::tuple<ElemSet, ElemSet, ElemSet>> witness;
};
// Throws InputError unless the site's topology is the one S^gamma generates.
RetroReport is_retro_packeted(const Site& site, const Packeting& pk);

}  // namespace prosite
