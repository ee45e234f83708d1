#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "prosite/elemset.hpp"

namespace prosite {

// A finite preordered set. Ids run 0..size()-1; the relation is stored as one
// bit row per element (`down(a)` = everything below a).
class Proset {
 public:
  Proset() = default;

  // Builds from an explicit relation and validates reflexivity and
  // transitivity. `below[a]` holds every d with d <= a.
  static Proset from_rows(std::vector<std::string> labels, std::vector<ElemSet> below);

  int size() const { return static_cast<int>(labels_.size()); }
  ElemSet all() const { return ElemSet::full(size()); }
  const std::string& label(int id) const { return labels_[static_cast<std::size_t>(id)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;
  // Throws InputError naming the label when it is not an element.
  int id_of(std::string_view label) const;

  bool le(int a, int b) const { return down_[static_cast<std::size_t>(b)].contains(a); }
  bool equivalent(int a, int b) const { return le(a, b) && le(b, a); }
  ElemSet down(int a) const { return down_[static_cast<std::size_t>(a)]; }
  ElemSet up(int a) const { return up_[static_cast<std::size_t>(a)]; }

  // Sub-proset on `subset`; ids are renumbered in increasing order and
  // `original` (when given) receives the old id of each new id.
  Proset induced(ElemSet subset, std::vector<int>* original = nullptr) const;

  std::string label_set(ElemSet s) const;

  bool operator==(const Proset&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<ElemSet> down_;
  std::vector<ElemSet> up_;
};

// Least reflexive-transitive relation containing the generator pairs.
Proset close_relation(std::vector<std::string> elements,
                      const std::vector<std::pair<std::string, std::string>>& pairs);

ElemSet down_closure(const Proset& p, ElemSet s);
ElemSet up_closure(const Proset& p, ElemSet s);

// Greatest lower bound, least id among equivalent candidates.
std::optional<int> meet(const Proset& p, int a, int b);
// Greatest element, least id among equivalent candidates.
std::optional<int> top(const Proset& p);
// Meet of a whole nonempty set, if every partial meet exists.
std::optional<int> meet_of(const Proset& p, ElemSet s);

struct CompletenessReport {
  bool complete = false;
  bool missing_top = false;
  std::optional<std::pair<int, int>> missing_meet;
};
CompletenessReport is_finitely_complete(const Proset& p);

// Degree-0 shadow of a category: a <= b iff some composite of arrows runs
// a -> b. `hom_nonempty[a][b]` records a generating arrow; identities are
// required.
Proset proset_of_category(std::vector<std::string> objects,
                          const std::vector<std::vector<bool>>& hom_nonempty);

// Monotone map between prosets, checked on construction.
struct ProsetMap {
  Proset source;
  Proset target;
  std::vector<int> image;

  ProsetMap() = default;
  ProsetMap(Proset src, Proset tgt, std::vector<int> img);
  static ProsetMap identity(const Proset& p);

  int operator()(int a) const { return image[static_cast<std::size_t>(a)]; }
  ElemSet apply(ElemSet s) const;
  ElemSet preimage(ElemSet s) const;
};

struct FlatnessReport {
  bool flat = false;
  // condition (i): a target element below no image element
  std::optional<int> uncovered;
  // condition (ii): (h, c, c') with no c'' below both c, c' and above h
  std::optional<std::tuple<int, int, int>> unfiltered;
};
FlatnessReport is_flat_map(const ProsetMap& f);

}  // namespace prosite
