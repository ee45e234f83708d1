#include "prosite/frame.hpp"

#include <sstream>

#include "prosite/closure.hpp"
#include "prosite/error.hpp"
#include "prosite/kernels.hpp"

namespace prosite {

ElemSet ideal_closure(const Site& site, ElemSet s) {
  const Proset& p = site.proset();
  ElemSet current = down_closure(p, s);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < p.size(); ++c) {
      if (current.contains(c)) continue;
      for (ElemSet r : site.covers(c))
        if (r.subset_of(current)) {
          current |= p.down(c);
          changed = true;
          break;
        }
    }
  }
  return current;
}

ElemSet principal_ideal(const Site& site, int c) { return ideal_closure(site, ElemSet::single(c)); }

bool is_ideal(const Site& site, ElemSet s) { return ideal_closure(site, s) == s; }

Frame::Frame(int width, std::vector<ElemSet> members, Closure close, bool build_tables)
    : width_(width), members_(std::move(members)), close_(std::move(close)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.back() != ElemSet::full(width_))
    throw ContractError("frame family does not contain its universe");
  for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i].bits(), static_cast<int>(i));
  if (members_.size() <= 256) {
    for (ElemSet a : members_)
      for (ElemSet b : members_)
        if (!index_.count((a & b).bits())) throw ContractError("frame family is not closed under intersection");
  }
  if (build_tables && members_.size() <= kTableLimit) {
    auto t = members_.size() >= 64 ? kernels::frame_tables_parallel(*this) : kernels::frame_tables_serial(*this);
    join_ = std::move(t.join);
    meet_ = std::move(t.meet);
  }
}

std::optional<int> Frame::index_of(ElemSet s) const {
  auto it = index_.find(s.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Frame::closure_index(ElemSet s) const {
  if (close_) {
    if (auto i = index_of(close_(s))) return *i;
    throw ContractError("frame closure left the family");
  }
  ElemSet acc = ElemSet::full(width_);
  for (ElemSet m : members_)
    if (s.subset_of(m)) acc &= m;
  return *index_of(acc);
}

int Frame::meet(int a, int b) const {
  if (has_tables()) return meet_[static_cast<std::size_t>(a) * members_.size() + static_cast<std::size_t>(b)];
  return *index_of(element(a) & element(b));
}

int Frame::join(int a, int b) const {
  if (has_tables()) return join_[static_cast<std::size_t>(a) * members_.size() + static_cast<std::size_t>(b)];
  return closure_index(element(a) | element(b));
}

void Frame::set_tables(std::vector<int> join, std::vector<int> meet) {
  join_ = std::move(join);
  meet_ = std::move(meet);
}

Frame frame_of_ideals(const Site& site, std::size_t cap) {
  bool overflow = false;
  auto close = [owned = std::make_shared<const Site>(site)](ElemSet s) { return ideal_closure(*owned, s); };
  auto ideals = enumerate_closed_sets(site.proset().all(), close, cap, [&] { overflow = true; });
  if (overflow) throw ResourceError("more than " + std::to_string(cap) + " J-ideals");
  return Frame(site.size(), std::move(ideals), close);
}

std::optional<std::string> frame_law_violation(const Frame& f) {
  const int n = f.size();
  auto name = [&](int i) { return f.element(i).to_string(f.width()); };
  for (int a = 0; a < n; ++a) {
    if (f.join(a, f.bottom()) != a || f.meet(a, f.top()) != a) return "bounds fail at " + name(a);
    for (int b = 0; b < n; ++b) {
      if (f.join(a, b) != f.join(b, a) || f.meet(a, b) != f.meet(b, a)) return "commutativity fails at " + name(a);
      if (f.join(a, f.meet(a, b)) != a || f.meet(a, f.join(a, b)) != a) return "absorption fails at " + name(a);
      if (f.le(a, b) != (f.meet(a, b) == a)) return "order disagrees with meet at " + name(a);
      for (int c = 0; c < n; ++c) {
        if (f.join(a, f.join(b, c)) != f.join(f.join(a, b), c)) return "join associativity fails at " + name(a);
        if (f.meet(a, f.meet(b, c)) != f.meet(f.meet(a, b), c)) return "meet associativity fails at " + name(a);
        if (f.meet(a, f.join(b, c)) != f.join(f.meet(a, b), f.meet(a, c)))
          return "frame distributivity fails at " + name(a) + " " + name(b) + " " + name(c);
      }
    }
  }
  return std::nullopt;
}

bool is_finite_element(const Frame& f, int a) {
  // Largest decomposition of a: everything below it. Any decomposition is a
  // subfamily of it; on a finite carrier accumulate until the join reaches a.
  std::vector<int> below;
  for (int x = 0; x < f.size(); ++x)
    if (f.le(x, a)) below.push_back(x);
  int acc = f.bottom();
  std::size_t used = 0;
  for (int x : below) {
    if (acc == a) break;
    acc = f.join(acc, x);
    ++used;
  }
  return acc == a && used <= below.size();
}

std::vector<int> finite_elements(const Frame& f) {
  std::vector<int> out;
  for (int a = 0; a < f.size(); ++a)
    if (is_finite_element(f, a)) out.push_back(a);
  return out;
}

bool is_coherent(const Frame& f) {
  std::vector<char> finite(static_cast<std::size_t>(f.size()), 0);
  for (int a : finite_elements(f)) finite[static_cast<std::size_t>(a)] = 1;
  if (!finite[static_cast<std::size_t>(f.top())]) return false;
  for (int a = 0; a < f.size(); ++a) {
    int acc = f.bottom();
    for (int x = 0; x < f.size(); ++x)
      if (finite[static_cast<std::size_t>(x)] && f.le(x, a)) acc = f.join(acc, x);
    if (acc != a) return false;
  }
  for (int a = 0; a < f.size(); ++a)
    for (int b = 0; b < f.size(); ++b)
      if (finite[static_cast<std::size_t>(a)] && finite[static_cast<std::size_t>(b)] &&
          !finite[static_cast<std::size_t>(f.meet(a, b))])
        return false;
  return true;
}

Frame product_frame(const Frame& a, const Frame& b) {
  if (a.width() + b.width() > kMaxElements) throw ResourceError("product frame exceeds 64 ids");
  std::vector<ElemSet> members;
  for (ElemSet x : a.elements())
    for (ElemSet y : b.elements()) members.push_back(x | ElemSet(y.bits() << a.width()));
  const int shift = a.width();
  const ElemSet left = ElemSet::full(shift);
  auto close = [fa = std::make_shared<const Frame>(a), fb = std::make_shared<const Frame>(b), shift,
                left](ElemSet s) {
    const ElemSet x = fa->element(fa->closure_index(s & left));
    const ElemSet y = fb->element(fb->closure_index(ElemSet(s.bits() >> shift)));
    return x | ElemSet(y.bits() << shift);
  };
  return Frame(a.width() + b.width(), std::move(members), close);
}

std::optional<std::string> frame_map_violation(const FrameMap& m) {
  const Frame& s = *m.source;
  const Frame& t = *m.target;
  if (m(s.top()) != t.top()) return "top not preserved";
  if (m(s.bottom()) != t.bottom()) return "bottom (empty join) not preserved";
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      if (m(s.meet(a, b)) != t.meet(m(a), m(b)))
        return "meet of " + s.element(a).to_string(s.width()) + " and " + s.element(b).to_string(s.width()) +
               " not preserved";
      if (m(s.join(a, b)) != t.join(m(a), m(b)))
        return "join of " + s.element(a).to_string(s.width()) + " and " + s.element(b).to_string(s.width()) +
               " not preserved";
    }
  return std::nullopt;
}

FrameMap frame_map_of_prosite_map(const ProsetMap& f, const Site& src, const Site& tgt, std::size_t cap) {
  if (!is_prosite_map(f, src, tgt).ok) throw ContractError("map is not a prosite map");
  FrameMap m;
  m.source = std::make_shared<const Frame>(frame_of_ideals(src, cap));
  m.target = std::make_shared<const Frame>(frame_of_ideals(tgt, cap));
  for (ElemSet ideal : m.source->elements())
    m.image.push_back(*m.target->index_of(ideal_closure(tgt, f.apply(ideal))));
  return m;
}

bool preserves_finite_elements(const FrameMap& m) {
  for (int a : finite_elements(*m.source))
    if (!is_finite_element(*m.target, m(a))) return false;
  return true;
}

}  // namespace prosite
