#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prosite/elemset.hpp"
#include "prosite/points.hpp"

namespace prosite {

// A finite commutative unital ring given by its operation tables. Carriers
// are limited to 64 elements so ideals fit in an ElemSet.
class FiniteCommRing {
 public:
  FiniteCommRing() = default;

  // Checks the commutative ring axioms exhaustively and locates 0 and 1.
  static FiniteCommRing from_tables(std::vector<std::string> labels, std::vector<int> add, std::vector<int> mul);
  static FiniteCommRing zmod(int n);
  static FiniteCommRing product(const FiniteCommRing& a, const FiniteCommRing& b);

  int size() const { return static_cast<int>(labels_.size()); }
  ElemSet all() const { return ElemSet::full(size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(const std::string& label) const;
  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int zero() const { return zero_; }
  int one() const { return one_; }
  bool is_zero_ring() const { return size() == 1; }
  bool is_idempotent(int a) const { return mul(a, a) == a; }
  bool is_unit(int a) const;

  // How the ring was specified: "zmod 12", "product zmod 2 zmod 3", "table".
  const std::string& descriptor() const { return descriptor_; }
  void set_descriptor(std::string d) { descriptor_ = std::move(d); }

  const std::vector<int>& add_table() const { return add_; }
  const std::vector<int>& mul_table() const { return mul_; }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b);
  }
  std::vector<std::string> labels_;
  std::vector<int> add_, mul_, neg_;
  int zero_ = 0, one_ = 0;
  std::string descriptor_ = "table";
};

// Additive subgroups, then those closed under multiplication by R.
std::vector<ElemSet> additive_subgroups(const FiniteCommRing& r);
std::vector<ElemSet> ring_ideals(const FiniteCommRing& r);
ElemSet ideal_generated(const FiniteCommRing& r, ElemSet gens);
bool is_prime_ideal(const FiniteCommRing& r, ElemSet ideal);
std::vector<ElemSet> prime_ideals(const FiniteCommRing& r);
// "(g)" for a principal ideal with least generator g, else "(g1,g2,...)".
std::string ideal_label(const FiniteCommRing& r, ElemSet ideal);

// A finite space with a distinguished base of compact opens.
struct SpectralSpace {
  FiniteSpace space;
  std::vector<ElemSet> base;
};
// Throws ContractError unless the space is spectral and the base is a base
// of opens closed under finite intersection.
SpectralSpace make_spectral(FiniteSpace space, std::vector<ElemSet> base);

struct RingSpectrum {
  SpectralSpace spectral;
  std::vector<ElemSet> primes;  // point i is primes[i]
};
// Prime ideals with the Zariski topology generated by D(f). Throws
// ContractError on the zero ring.
RingSpectrum spec_ring(const FiniteCommRing& r);
// D(f) = primes not containing f.
ElemSet basic_open(const RingSpectrum& s, int f);

struct Localization {
  FiniteCommRing ring;
  ElemSet saturation;
  std::vector<int> canonical;  // r -> class of r/1
  // class of r/s for s in the saturation (-1 elsewhere), indexed r * n + s
  std::vector<int> fraction;
  bool zero_ring = false;

  int of(int r, int s, int n) const { return fraction[static_cast<std::size_t>(r * n + s)]; }
};
// Ring of fractions with denominators in the multiplicative closure of S and 1.
Localization localize_ring(const FiniteCommRing& r, ElemSet s);
ElemSet multiplicative_closure(const FiniteCommRing& r, ElemSet s);

bool is_ring_hom(const FiniteCommRing& from, const FiniteCommRing& to, const std::vector<int>& f);
// Reduction Z/n -> Z/m for m dividing n.
std::vector<int> reduction_hom(int n, int m);
// Spec of a ring hom: q -> f^-1(q), as point indices.
std::vector<int> spec_map(const RingSpectrum& from_spec, const RingSpectrum& to_spec, const FiniteCommRing& from,
                          const std::vector<int>& f);

std::optional<std::vector<int>> find_ring_isomorphism(const FiniteCommRing& a, const FiniteCommRing& b);

}  // namespace prosite
