#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prosite/elemset.hpp"
#include "prosite/order.hpp"
#include "prosite/points.hpp"
#include "prosite/ring.hpp"
#include "prosite/site.hpp"

namespace prosite {

// Commutative semigroup given by its multiplication table.
class MulSemigroup {
 public:
  MulSemigroup() = default;
  // Checks associativity and commutativity exhaustively.
  static MulSemigroup from_table(std::vector<std::string> labels, std::vector<int> mul);
  static MulSemigroup of_ring(const FiniteCommRing& r);

  int size() const { return static_cast<int>(labels_.size()); }
  ElemSet all() const { return ElemSet::full(size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int mul(int a, int b) const {
    return mul_[static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b)];
  }

 private:
  std::vector<std::string> labels_;
  std::vector<int> mul_;
};

bool is_semigroup_ideal(const MulSemigroup& s, ElemSet i);
// Nonempty proper ideals in bitset order.
std::vector<ElemSet> semigroup_ideals(const MulSemigroup& s);
// {(x, y) : xy in I}, read off the pullback of I -> R along multiplication,
// compared with (I x R) u (R x I). Throws ContractError unless I is a proper
// ideal.
bool is_prime_pullback(const MulSemigroup& s, ElemSet i);
bool is_prime_direct(const MulSemigroup& s, ElemSet i);

// Objects with closed supports in a spectral space; tensor is support
// intersection. Stands in for a tensor triangulated category.
class SupportModel {
 public:
  SupportModel() = default;
  // Validates: supports closed, unit has full and zero empty support, closure
  // under tensor, supports separate points, every closed set is a support.
  static SupportModel make(SpectralSpace space, std::vector<std::string> labels, std::vector<ElemSet> supp, int unit,
                           int zero, std::optional<FiniteCommRing> ring = std::nullopt);

  int size() const { return static_cast<int>(labels_.size()); }
  ElemSet all() const { return ElemSet::full(size()); }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(const std::string& label) const;
  ElemSet supp(int a) const { return supp_[static_cast<std::size_t>(a)]; }
  const std::vector<ElemSet>& supports() const { return supp_; }
  int unit() const { return unit_; }
  int zero() const { return zero_; }
  const SpectralSpace& space() const { return space_; }
  // The ring of an affine model.
  const std::optional<FiniteCommRing>& ring() const { return ring_; }
  // Least-id object supported on supp(a) n supp(b).
  int tensor(int a, int b) const;
  std::optional<int> with_support(ElemSet s) const;

 private:
  SpectralSpace space_;
  std::vector<std::string> labels_;
  std::vector<ElemSet> supp_;
  int unit_ = 0, zero_ = 0;
  std::optional<FiniteCommRing> ring_;
};

// One object per closed subset, labelled by its points.
SupportModel closed_support_model(const SpectralSpace& x);
// Over spec_ring(R): one object per closed subset; "1" has full support, "0"
// empty support, and the others are named cone(r) for the least r with
// V(r) equal to their support.
SupportModel affine_support_model(const FiniteCommRing& r);
// Same model with objects reordered: new object i is old object perm[i].
SupportModel permute_objects(const SupportModel& m, const std::vector<int>& perm);

// {b : supp(b) inside the union of supp(a), a in S}
ElemSet thick_ideal_generated(const SupportModel& m, ElemSet s);
bool is_tensor_ideal(const SupportModel& m, ElemSet i);
std::vector<ElemSet> tensor_ideals(const SupportModel& m);
// Throws ContractError on the improper ideal.
bool is_prime_tensor_ideal(const SupportModel& m, ElemSet i);
std::vector<ElemSet> prime_tensor_ideals(const SupportModel& m);

struct BalmerSpectrum {
  FiniteSpace space;           // points labelled by object bitsets
  std::vector<ElemSet> primes;  // point i is primes[i]
};
// Topology generated by U_a = {p : a in p}.
BalmerSpectrum balmer_spectrum(const SupportModel& m);

// a <= b iff supp(b) is inside supp(a).
Proset kleq_proset(const SupportModel& m);

struct GammaAssignment {
  Proset proset;              // objects lying in some prime
  std::vector<int> objects;   // model object of each proset element
  std::vector<ElemSet> gamma;  // intersection of the primes containing k, over proset ids
};
GammaAssignment gamma_assignment(const SupportModel& m);
// Validated packeting on the whole carrier; throws InputError when that
// carrier is not finitely complete (several closed points).
Packeting gamma_packeting(const SupportModel& m);
// Packeting on the objects of a prime p with the same formula.
GammaAssignment gamma_on_prime(const SupportModel& m, ElemSet prime);

struct Reconstruction {
  FiniteSpace space;                   // glued point space, labels are object bitsets
  std::vector<ElemSet> points;         // object set of each glued point
  std::vector<ElemSet> maximal_primes;
  std::vector<FiniteSpace> pieces;     // point space of each maximal prime's site
  std::vector<Site> sites;
  bool empty = false;                  // the model has no primes
};
// For each maximal prime p: the site on p with the S^gamma coverage plus
// tensor-splitting covers, its prime filters, then the quotient of the
// disjoint union identifying equal object sets.
Reconstruction reconstruct_space(const SupportModel& m);

// Reconstructed points not containing a.
ElemSet chi_c(const Reconstruction& rec, int a);
// {a : chi_c(a) misses U}. Throws ContractError unless U is open.
ElemSet ideal_of_open(const SupportModel& m, const Reconstruction& rec, ElemSet u);

// Point of Spec R that each reconstructed point of an affine model stands for.
std::vector<int> spec_points(const SupportModel& m, const Reconstruction& rec);
// Localization of R at S_U = {r : D(r) contains U}. Throws UnsupportedError
// on models without a ring.
Localization structure_ring(const SupportModel& m, const Reconstruction& rec, ElemSet u);

struct RingedSpace {
  FiniteSpace space;
  std::vector<ElemSet> opens;
  std::vector<Localization> rings;  // rings[i] lives on opens[i]
  struct Restriction {
    int from = 0, to = 0;  // indices into opens, opens[to] inside opens[from]
    std::vector<int> map;
  };
  std::vector<Restriction> restrictions;
};
RingedSpace ringed_space(const SupportModel& m, const Reconstruction& rec);
// Composition and identity laws of the restriction maps; first violation.
std::optional<std::string> presheaf_violation(const RingedSpace& rs);

// Object map together with the spectral map it is compatible with:
// supp'(F(a)) = space_map^-1(supp(a)).
struct ModelMap {
  std::vector<int> image;      // source object -> target object
  std::vector<int> space_map;  // target space point -> source space point
};
// Throws ValidationError(0, witness object) when the support contract fails.
void validate_model_map(const SupportModel& from, const SupportModel& to, const ModelMap& f);
ModelMap model_map_of_ring_hom(const SupportModel& from, const SupportModel& to, const std::vector<int>& hom);
ModelMap compose(const ModelMap& g, const ModelMap& f);  // g after f
// F -> F^-1 on reconstructed points, rec_to -> rec_from. Certifies continuity
// and chi_c(F(a)) = preimage of chi_c(a).
std::vector<int> functorial_map(const SupportModel& from, const SupportModel& to, const ModelMap& f,
                                const Reconstruction& rec_from, const Reconstruction& rec_to);

}  // namespace prosite
