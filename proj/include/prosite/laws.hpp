#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prosite/corpus.hpp"

namespace prosite {

// Result of one law on one instance. `applies` is false when the instance
// falls outside the law's hypotheses.
struct Outcome {
  bool applies = true;
  std::optional<std::string> failure;
};

struct Law {
  std::string id;
  std::string anchor;  // statement the law encodes
  std::string shape;   // corpus shape it consumes
  Outcome (*check)(const Instance&);
};

const std::vector<Law>& laws();
// Throws InputError listing the registered ids.
const Law& find_law(const std::string& id);

struct LawFailure {
  int index = 0;
  std::string message;
  io::json counterexample;
};

struct LawReport {
  std::string law;
  std::string anchor;
  std::string corpus;
  int instances = 0;
  int applicable = 0;
  std::vector<LawFailure> failures;  // sorted by index

  bool ok() const { return failures.empty(); }
  io::json to_json() const;
  std::string text() const;
};

// Runs the law over instances with `jobs` workers; exceptions count as
// failures of their instance. `inject_fault` marks one index as failing
// (harness self-test).
LawReport check_law(const Law& law, const std::vector<Instance>& instances, int jobs,
                    std::optional<int> inject_fault = std::nullopt, const std::string& corpus = "");
LawReport check_law(const Law& law, const CorpusSpec& spec, int jobs, std::optional<int> inject_fault = std::nullopt);

}  // namespace prosite
