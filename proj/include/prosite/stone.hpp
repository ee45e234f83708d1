#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prosite/order.hpp"
#include "prosite/points.hpp"
#include "prosite/ring.hpp"

namespace prosite {

// Bounded distributive lattice on at most 64 elements with cached join and
// meet tables.
class DistLattice {
 public:
  DistLattice() = default;

  // Checks antisymmetry, bounds, binary joins and meets, and distributivity
  // over every triple. Throws InputError naming a witness.
  static DistLattice from_proset(const Proset& p);
  // Family of sets closed under union and intersection, ordered by inclusion.
  static DistLattice from_family(std::vector<std::string> labels, const std::vector<ElemSet>& sets);

  int size() const { return order_.size(); }
  const Proset& order() const { return order_; }
  const std::string& label(int a) const { return order_.label(a); }
  bool le(int a, int b) const { return order_.le(a, b); }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(b);
  }
  Proset order_;
  std::vector<int> join_, meet_;
  int bottom_ = 0, top_ = 0;
};

DistLattice two_element_lattice();
DistLattice chain_lattice(int n);
// Down-sets of a proset under union and intersection.
DistLattice downset_lattice(const Proset& p);

bool is_lattice_hom(const DistLattice& d, const DistLattice& e, const std::vector<int>& f);
// Bounded lattice homomorphisms by backtracking, at most `limit` of them.
std::vector<std::vector<int>> lattice_homomorphisms(const DistLattice& d, const DistLattice& e,
                                                    std::size_t limit = 1U << 16);
std::optional<std::vector<int>> find_order_isomorphism(const Proset& a, const Proset& b);

struct LatticeSpectrum {
  SpectralSpace spectral;
  std::vector<ElemSet> filters;  // point i is filters[i]
  std::vector<ElemSet> phi;      // phi[a] = points whose filter contains a
};
bool is_prime_lattice_filter(const DistLattice& d, ElemSet f);
LatticeSpectrum spec_dlat(const DistLattice& d);
// Spec of f : D -> E sends a prime filter of E to its preimage.
std::vector<int> spec_dlat_map(const LatticeSpectrum& sd, const LatticeSpectrum& se, const DistLattice& d,
                               const std::vector<int>& f);

// Lattice of compact opens; every open is compact in a finite space. Throws
// ContractError on non-spectral input.
DistLattice dlat_of_spectral(const FiniteSpace& x);
DistLattice dlat_of_spectral(const SpectralSpace& x);
std::string point_set_label(const FiniteSpace& x, ElemSet s);

struct BoolRing {
  FiniteCommRing ring;
  std::vector<ElemSet> clopens;  // ring element i is clopens[i]
};
bool is_boolean_ring(const FiniteCommRing& r);
std::vector<ElemSet> clopen_sets(const FiniteSpace& x);
BoolRing clopen_boolring(const FiniteSpace& x);

// Continuous maps Spec A -> X pulling base opens back to compact opens.
std::vector<std::vector<int>> evaluate_hochster(const SpectralSpace& x, const FiniteCommRing& a);
// Boolean-algebra maps from the clopens of X to the idempotents of A, indexed
// by clopen position.
std::vector<std::vector<int>> evaluate_boolean_smashing(const FiniteSpace& x, const FiniteCommRing& a);

struct Coincidence {
  bool coincide = false;
  std::size_t hochster = 0;
  std::size_t boolean = 0;
  // (hochster index, boolean index) pairs of the natural correspondence
  std::vector<std::pair<int, int>> bijection;
};
// Throws ContractError unless X is discrete.
Coincidence coincidence_on_stone(const FiniteSpace& x, const FiniteCommRing& a);

struct LatticePushout {
  DistLattice lattice;
  std::vector<int> first, second;
};
// Pushout of f1 : D0 -> D1 and f2 : D0 -> D2, realised inside the power set
// of the compatible pairs of two-valued homomorphisms.
LatticePushout lattice_pushout(const DistLattice& d0, const DistLattice& d1, const DistLattice& d2,
                               const std::vector<int>& f1, const std::vector<int>& f2);

struct SpacePullback {
  FiniteSpace space;
  std::vector<int> first, second;
};
SpacePullback pullback_space(const FiniteSpace& x1, const FiniteSpace& x2, const FiniteSpace& y,
                             const std::vector<int>& g1, const std::vector<int>& g2);

}  // namespace prosite
