#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "prosite/order.hpp"

namespace testrng {

inline int below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

// Random preorder on n elements: each ordered pair is a generator with the
// given percent probability, then closed.
inline prosite::Proset proset(std::mt19937_64& rng, int n, int percent) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && below(rng, 100) < percent) pairs.emplace_back(labels[a], labels[b]);
  return prosite::close_relation(labels, pairs);
}

// Random poset: only pairs a < b by id are generated, so it is antisymmetric.
inline prosite::Proset poset(std::mt19937_64& rng, int n, int percent) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (below(rng, 100) < percent) pairs.emplace_back(labels[a], labels[b]);
  return prosite::close_relation(labels, pairs);
}

}  // namespace testrng

#include "prosite/site.hpp"

namespace testrng {

// Random site: random preorder plus up to `families` random generating
// families, saturated.
inline prosite::Site site(std::mt19937_64& rng, int n, int families) {
  const prosite::Proset p = proset(rng, n, 30);
  prosite::Coverage cov;
  for (int k = below(rng, families + 1); k > 0; --k) {
    const int c = below(rng, p.size());
    cov.push_back({c, prosite::ElemSet(rng() & (p.down(c).bits() & ~prosite::ElemSet::single(c).bits()))});
  }
  return prosite::saturate(p, cov);
}

}  // namespace testrng
