#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weylpol {

struct CheckResult {
  std::string name;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Suites: equivalence, recurrences, signatures, complex, vs, pbw, all.
std::vector<std::string> suite_names();

/// Runs a named suite with reproducible seeded randomness; throws
/// std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

/// Parallelism cap: WEYLPOL_THREADS when set, hardware concurrency otherwise.
int thread_limit();

}  // namespace weylpol
