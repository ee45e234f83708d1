#include "prosite/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

#include "prosite/frame.hpp"

namespace prosite::kernels {

namespace {

void fill_row(const Frame& f, int a, FrameTables& t) {
  const std::size_t n = static_cast<std::size_t>(f.size());
  for (int b = 0; b < f.size(); ++b) {
    const std::size_t k = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
    t.meet[k] = *f.index_of(f.element(a) & f.element(b));
    t.join[k] = f.closure_index(f.element(a) | f.element(b));
  }
}

FrameTables sized(const Frame& f) {
  const std::size_t n = static_cast<std::size_t>(f.size());
  FrameTables t;
  t.join.assign(n * n, 0);
  t.meet.assign(n * n, 0);
  return t;
}

}  // namespace

FrameTables frame_tables_serial(const Frame& f) {
  FrameTables t = sized(f);
  for (int a = 0; a < f.size(); ++a) fill_row(f, a, t);
  return t;
}

FrameTables frame_tables_parallel(const Frame& f) {
  FrameTables t = sized(f);
  const int n = f.size();
#pragma omp parallel for schedule(dynamic, 8)
  for (int a = 0; a < n; ++a) fill_row(f, a, t);
  return t;
}

void for_each_index_serial(int count, const std::function<void(int)>& body) {
  for (int i = 0; i < count; ++i) body(i);
}

void for_each_index_parallel(int count, int jobs, const std::function<void(int)>& body) {
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  // An exception may not leave the parallel region; keep one per index and
  // rethrow the lowest so the outcome matches the serial loop.
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(count, 0)));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace prosite::kernels
