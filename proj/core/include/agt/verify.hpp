#pragma once

#include <string>
#include <vector>

#include "agt/cardinal.hpp"

namespace agt {

struct SuiteOptions {
  unsigned long long seed = 0;  // 0 = the suite's canonical seed
  long long cap = 10000;        // finite-engine size budget
  CardinalMode mode = CardinalMode::Zfc;
};

struct SuiteReport {
  std::string name;
  long long checked = 0;
  long long skipped = 0;  // instances dropped on an engine cap
  long long failure_count = 0;
  std::vector<std::string> failures;  // first few counterexamples, verbatim
  std::string payload;                // formula-table: the exact table text

  bool ok() const { return failure_count == 0; }
};

std::vector<std::string> suite_names();

// Runs one of: formula-table, finite-lattice, zeta, closure, classifier,
// cardinal, dichotomy, equalizer. Deterministic given (seed, cap, mode).
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace agt
