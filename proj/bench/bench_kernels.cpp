#include <chrono>
#include <cstdio>
#include <string>

#include "prosite/corpus.hpp"
#include "prosite/frame.hpp"
#include "prosite/kernels.hpp"
#include "prosite/laws.hpp"

using namespace prosite;

namespace {

template <class F>
double time_it(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  // 2^k down-sets of a k-element antichain
  for (int k : {8, 10, 11}) {
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("a" + std::to_string(i));
    const Frame f = frame_of_ideals(Site(close_relation(labels, {})));
    kernels::FrameTables s, p;
    const double ts = time_it([&] { s = kernels::frame_tables_serial(f); });
    const double tp = time_it([&] { p = kernels::frame_tables_parallel(f); });
    std::printf("frame tables  %5d elements  serial %.4f s  parallel %.4f s  %s\n", f.size(), ts, tp,
                s.join == p.join && s.meet == p.meet ? "equal" : "DIFFER");
  }
  for (const char* id : {"thm-1-1-1", "lem-1-3-13", "thm-a-1-11"}) {
    const Law& law = find_law(id);
    CorpusSpec spec{7, 6, 1000, law.shape};
    if (law.shape == "model") spec.max_elements = 60;
    const auto corpus = generate_corpus(spec, 0);
    LawReport a, b;
    const double ts = time_it([&] { a = check_law(law, corpus, 1); });
    const double tp = time_it([&] { b = check_law(law, corpus, 0); });
    std::printf("%-12s %5zu instances  serial %.4f s  parallel %.4f s  %s\n", id, corpus.size(), ts, tp,
                a.to_json() == b.to_json() ? "equal" : "DIFFER");
  }
}
