#pragma once

#include <functional>
#include <vector>

namespace prosite {
class Frame;
}

namespace prosite::kernels {

struct FrameTables {
  std::vector<int> join;
  std::vector<int> meet;
};

// Row-major size() x size() join and meet tables. The serial version is the
// reference; the parallel one splits rows across OpenMP threads.
FrameTables frame_tables_serial(const Frame& f);
FrameTables frame_tables_parallel(const Frame& f);

// Runs body(i) for i in [0, count). Results must be written to per-index
// slots so the outcome does not depend on scheduling.
void for_each_index_serial(int count, const std::function<void(int)>& body);
void for_each_index_parallel(int count, int jobs, const std::function<void(int)>& body);

}  // namespace prosite::kernels
