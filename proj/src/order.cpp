#include "prosite/order.hpp"

#include <set>
#include <sstream>

#include "prosite/error.hpp"

namespace prosite {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw InputError("proset has no elements");
  if (labels.size() > static_cast<std::size_t>(kMaxElements))
    throw InputError("proset has more than 64 elements");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InputError("empty element label");
    if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
  }
}

std::vector<ElemSet> transpose(const std::vector<ElemSet>& rows) {
  std::vector<ElemSet> cols(rows.size());
  for (std::size_t b = 0; b < rows.size(); ++b)
    for (int a : rows[b]) cols[static_cast<std::size_t>(a)].insert(static_cast<int>(b));
  return cols;
}

// Warshall on bit rows: row b gains row k whenever k <= b.
void transitive_close(std::vector<ElemSet>& below) {
  const std::size_t n = below.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t b = 0; b < n; ++b)
      if (below[b].contains(static_cast<int>(k))) below[b] |= below[k];
}

}  // namespace

Proset Proset::from_rows(std::vector<std::string> labels, std::vector<ElemSet> below) {
  check_labels(labels);
  if (below.size() != labels.size()) throw InputError("relation size does not match element count");
  const int n = static_cast<int>(labels.size());
  for (int a = 0; a < n; ++a) {
    if (!below[static_cast<std::size_t>(a)].contains(a))
      throw InputError("relation is not reflexive at '" + labels[static_cast<std::size_t>(a)] + "'");
    if (!below[static_cast<std::size_t>(a)].subset_of(ElemSet::full(n)))
      throw InputError("relation references an element outside the carrier");
  }
  for (int b = 0; b < n; ++b)
    for (int k : below[static_cast<std::size_t>(b)])
      if (!below[static_cast<std::size_t>(k)].subset_of(below[static_cast<std::size_t>(b)]))
        throw InputError("relation is not transitive through '" + labels[static_cast<std::size_t>(k)] + "'");
  Proset p;
  p.labels_ = std::move(labels);
  p.up_ = transpose(below);
  p.down_ = std::move(below);
  return p;
}

std::optional<int> Proset::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

int Proset::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw InputError("unknown element '" + std::string(label) + "'");
}

Proset Proset::induced(ElemSet subset, std::vector<int>* original) const {
  std::vector<int> ids = subset.to_vector();
  std::vector<std::string> labels;
  std::vector<ElemSet> below(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    labels.push_back(label(ids[i]));
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (le(ids[j], ids[i])) below[i].insert(static_cast<int>(j));
  }
  if (original) *original = ids;
  return from_rows(std::move(labels), std::move(below));
}

std::string Proset::label_set(ElemSet s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : s) {
    if (!first) os << ',';
    os << label(i);
    first = false;
  }
  os << '}';
  return os.str();
}

Proset close_relation(std::vector<std::string> elements,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
  check_labels(elements);
  auto index = [&](const std::string& l) {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == l) return static_cast<int>(i);
    throw InputError("unknown element '" + l + "'");
  };
  std::vector<ElemSet> below(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) below[i].insert(static_cast<int>(i));
  for (const auto& [lo, hi] : pairs) below[static_cast<std::size_t>(index(hi))].insert(index(lo));
  transitive_close(below);
  return Proset::from_rows(std::move(elements), std::move(below));
}

ElemSet down_closure(const Proset& p, ElemSet s) {
  ElemSet out;
  for (int a : s) out |= p.down(a);
  return out;
}

ElemSet up_closure(const Proset& p, ElemSet s) {
  ElemSet out;
  for (int a : s) out |= p.up(a);
  return out;
}

std::optional<int> meet(const Proset& p, int a, int b) {
  const ElemSet lower = p.down(a) & p.down(b);
  // a lower bound m is a meet iff every lower bound lies below m
  for (int m : lower)
    if (lower.subset_of(p.down(m))) return m;
  return std::nullopt;
}

std::optional<int> top(const Proset& p) {
  for (int t = 0; t < p.size(); ++t)
    if (p.down(t) == p.all()) return t;
  return std::nullopt;
}

std::optional<int> meet_of(const Proset& p, ElemSet s) {
  if (s.empty()) return top(p);
  std::optional<int> acc = s.first();
  for (int x : s) {
    acc = meet(p, *acc, x);
    if (!acc) return std::nullopt;
  }
  return acc;
}

CompletenessReport is_finitely_complete(const Proset& p) {
  CompletenessReport r;
  r.missing_top = !top(p);
  for (int a = 0; a < p.size() && !r.missing_meet; ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (!meet(p, a, b)) {
        r.missing_meet = std::make_pair(a, b);
        break;
      }
  r.complete = !r.missing_top && !r.missing_meet;
  return r;
}

Proset proset_of_category(std::vector<std::string> objects,
                          const std::vector<std::vector<bool>>& hom_nonempty) {
  check_labels(objects);
  const std::size_t n = objects.size();
  if (hom_nonempty.size() != n) throw InputError("hom relation size does not match object count");
  std::vector<ElemSet> below(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (hom_nonempty[a].size() != n) throw InputError("hom relation row has wrong length");
    if (!hom_nonempty[a][a]) throw InputError("object '" + objects[a] + "' has no identity arrow");
    for (std::size_t b = 0; b < n; ++b)
      if (hom_nonempty[a][b]) below[b].insert(static_cast<int>(a));
  }
  transitive_close(below);
  return Proset::from_rows(std::move(objects), std::move(below));
}

ProsetMap::ProsetMap(Proset src, Proset tgt, std::vector<int> img)
    : source(std::move(src)), target(std::move(tgt)), image(std::move(img)) {
  if (image.size() != static_cast<std::size_t>(source.size()))
    throw InputError("map is not total on its source");
  for (int v : image)
    if (v < 0 || v >= target.size()) throw InputError("map image outside target");
  for (int a = 0; a < source.size(); ++a)
    for (int b : source.up(a))
      if (!target.le((*this)(a), (*this)(b)))
        throw InputError("map is not monotone: " + source.label(a) + " <= " + source.label(b));
}

ProsetMap ProsetMap::identity(const Proset& p) {
  std::vector<int> img(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) img[static_cast<std::size_t>(i)] = i;
  return ProsetMap(p, p, std::move(img));
}

ElemSet ProsetMap::apply(ElemSet s) const {
  ElemSet out;
  for (int a : s) out.insert((*this)(a));
  return out;
}

ElemSet ProsetMap::preimage(ElemSet s) const {
  ElemSet out;
  for (int a = 0; a < source.size(); ++a)
    if (s.contains((*this)(a))) out.insert(a);
  return out;
}

FlatnessReport is_flat_map(const ProsetMap& f) {
  FlatnessReport r;
  const Proset& src = f.source;
  const Proset& tgt = f.target;
  // above[h] = source elements whose image lies above h
  std::vector<ElemSet> above(static_cast<std::size_t>(tgt.size()));
  for (int c = 0; c < src.size(); ++c)
    for (int h : tgt.down(f(c))) above[static_cast<std::size_t>(h)].insert(c);
  for (int h = 0; h < tgt.size(); ++h) {
    const ElemSet cands = above[static_cast<std::size_t>(h)];
    if (cands.empty()) {
      r.uncovered = h;
      return r;
    }
    for (int c : cands)
      for (int c2 : cands) {
        if (c2 < c) continue;
        if ((cands & src.down(c) & src.down(c2)).empty()) {
          r.unfiltered = std::make_tuple(h, c, c2);
          return r;
        }
      }
  }
  r.flat = true;
  return r;
}

}  // namespace prosite
