#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prosite/elemset.hpp"
#include "prosite/frame.hpp"
#include "prosite/site.hpp"

namespace prosite {

inline constexpr int kMaxSpacePoints = 16;
inline constexpr int kDefaultHomeomorphismCap = 12;

// A finite topological space: labelled points and the full family of opens in
// increasing bit order. Finite spaces are Alexandrov, so each point has a
// least open neighbourhood.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  // Topology generated by `subbasis` (the whole space is always open).
  static FiniteSpace from_subbasis(std::vector<std::string> labels, const std::vector<ElemSet>& subbasis);
  // `opens` must already be a topology; checked.
  static FiniteSpace from_opens(std::vector<std::string> labels, std::vector<ElemSet> opens);
  static FiniteSpace discrete(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  ElemSet all() const { return ElemSet::full(size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<ElemSet>& opens() const { return opens_; }
  bool is_open(ElemSet s) const;
  bool is_closed(ElemSet s) const { return is_open(all() - s); }
  ElemSet neighbourhood(int x) const { return nbhd_[static_cast<std::size_t>(x)]; }
  ElemSet closure(ElemSet s) const;
  // p lies in the closure of q (p is a specialization of q).
  bool specializes(int p, int q) const { return neighbourhood(p).contains(q); }

  bool operator==(const FiniteSpace& o) const { return labels_ == o.labels_ && opens_ == o.opens_; }

 private:
  void index_neighbourhoods();
  std::vector<std::string> labels_;
  std::vector<ElemSet> opens_;
  std::vector<ElemSet> nbhd_;
};

// Literal check of the four J-prime filter conditions.
bool is_prime_filter(const Site& site, ElemSet f);
// All J-prime filters, canonical order, by pruned backtracking.
std::vector<ElemSet> enumerate_prime_filters(const Site& site);

// Prime filters with opens U_I for I ranging over J-ideals.
FiniteSpace point_space(const Site& site, std::size_t cap = kDefaultIdealCap);
// Same points, topology generated by the sub-basis B_c = {F : c in F}.
FiniteSpace point_space_from_subbasis(const Site& site);

// Completely prime filters of a finite frame, each labelled by the bitset of
// the element generating it; opens pt(a).
struct FramePoints {
  FiniteSpace space;
  std::vector<int> generator;  // frame index generating each point's filter
};
FramePoints frame_points(const Frame& f);

// Point bijection mapping opens onto opens, if any. Throws ResourceError when
// the spaces are larger than `cap`.
std::optional<std::vector<int>> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y,
                                                   int cap = kDefaultHomeomorphismCap);
bool is_homeomorphic(const FiniteSpace& x, const FiniteSpace& y, int cap = kDefaultHomeomorphismCap);

bool is_t0(const FiniteSpace& x);
bool is_sober(const FiniteSpace& x);
bool is_spectral(const FiniteSpace& x);

struct SpatialReport {
  bool spatial = false;
  std::optional<std::pair<int, int>> witness;  // frame indices (U, V)
};
SpatialReport is_spatial(const Frame& f);

// Image of a point map is continuous iff preimages of opens are open.
bool is_continuous(const FiniteSpace& from, const FiniteSpace& to, const std::vector<int>& map);

}  // namespace prosite
