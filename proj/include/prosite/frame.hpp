#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "prosite/elemset.hpp"
#include "prosite/site.hpp"

namespace prosite {

inline constexpr std::size_t kDefaultIdealCap = std::size_t{1} << 20;
// Above this many elements join/meet are computed on demand instead of tabled.
inline constexpr std::size_t kTableLimit = 2048;

// Smallest J-ideal containing s: alternate down-closure and cover-completion
// until stable.
ElemSet ideal_closure(const Site& site, ElemSet s);
ElemSet principal_ideal(const Site& site, int c);
bool is_ideal(const Site& site, ElemSet s);

// A finite frame presented as an intersection-closed family of subsets of a
// universe of `width` ids (meet = intersection, join = least member above the
// union). Elements are kept in increasing bit order.
class Frame {
 public:
  Frame() = default;
  using Closure = std::function<ElemSet(ElemSet)>;

  // `members` must be intersection-closed and contain the universe; checked.
  // `close` maps a subset to the least member above it; when omitted a scan
  // over the members is used.
  Frame(int width, std::vector<ElemSet> members, Closure close = {}, bool build_tables = true);

  int size() const { return static_cast<int>(members_.size()); }
  int width() const { return width_; }
  ElemSet element(int i) const { return members_[static_cast<std::size_t>(i)]; }
  const std::vector<ElemSet>& elements() const { return members_; }
  std::optional<int> index_of(ElemSet s) const;

  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  bool le(int a, int b) const { return element(a).subset_of(element(b)); }
  int meet(int a, int b) const;
  int join(int a, int b) const;
  // Least member containing s.
  int closure_index(ElemSet s) const;

  bool has_tables() const { return !join_.empty(); }
  const std::vector<int>& join_table() const { return join_; }
  const std::vector<int>& meet_table() const { return meet_; }
  // Installs precomputed tables (from the table kernels).
  void set_tables(std::vector<int> join, std::vector<int> meet);

  bool operator==(const Frame& o) const { return width_ == o.width_ && members_ == o.members_; }

 private:
  int width_ = 0;
  std::vector<ElemSet> members_;
  Closure close_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> join_;
  std::vector<int> meet_;
};

// All J-ideals of the site in canonical order with tables filled. Throws
// ResourceError when more than `cap` ideals exist.
Frame frame_of_ideals(const Site& site, std::size_t cap = kDefaultIdealCap);

// Exhaustive lattice and frame-distributivity laws; first violation or none.
std::optional<std::string> frame_law_violation(const Frame& f);

// Elements a such that every join decomposition of a has a finite subjoin
// equal to a, certified per element.
std::vector<int> finite_elements(const Frame& f);
bool is_finite_element(const Frame& f, int a);
bool is_coherent(const Frame& f);

// Product frame: members are pairs laid side by side (left ids first).
Frame product_frame(const Frame& a, const Frame& b);

struct FrameMap {
  std::shared_ptr<const Frame> source;
  std::shared_ptr<const Frame> target;
  std::vector<int> image;

  int operator()(int a) const { return image[static_cast<std::size_t>(a)]; }
};

// Exhaustive check that m preserves binary meets, top, binary joins and bottom
// (all joins, on a finite carrier).
std::optional<std::string> frame_map_violation(const FrameMap& m);

// I -> ideal_closure(target, f(I)). Throws ContractError unless f is a
// prosite map.
FrameMap frame_map_of_prosite_map(const ProsetMap& f, const Site& src, const Site& tgt,
                                  std::size_t cap = kDefaultIdealCap);

bool preserves_finite_elements(const FrameMap& m);

}  // namespace prosite
