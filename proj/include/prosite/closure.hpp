#pragma once

#include <algorithm>
#include <vector>

#include "prosite/elemset.hpp"

namespace prosite {

// Enumerates every closed set of a closure operator on `universe` with
// Ganter's next-closure algorithm, then sorts by bit value so callers get the
// canonical (lexicographic on membership bitsets) order. `close` must be
// extensive, monotone and idempotent on subsets of `universe`.
// `limit` bounds the number of closed sets; the callback `on_overflow` fires
// (and enumeration stops) when it is exceeded.
template <class Close, class Overflow>
std::vector<ElemSet> enumerate_closed_sets(ElemSet universe, Close&& close, std::size_t limit,
                                           Overflow&& on_overflow) {
  std::vector<int> ids = universe.to_vector();
  std::vector<ElemSet> out;
  ElemSet current = close(ElemSet{});
  out.push_back(current);
  // prefix[k] = the first k ids of the universe in enumeration order
  std::vector<ElemSet> prefix(ids.size() + 1);
  for (std::size_t k = 0; k < ids.size(); ++k) prefix[k + 1] = prefix[k] | ElemSet::single(ids[k]);

  for (;;) {
    bool advanced = false;
    for (std::size_t k = ids.size(); k-- > 0;) {
      const int i = ids[k];
      if (current.contains(i)) continue;
      const ElemSet head = current & prefix[k];
      const ElemSet next = close(head | ElemSet::single(i));
      if ((next & prefix[k]) == head) {
        current = next;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    if (out.size() >= limit) {
      on_overflow();
      break;
    }
    out.push_back(current);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace prosite
