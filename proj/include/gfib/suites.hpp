#pragma once

// Bulk self-checks behind `gfib verify`. Each suite fans its (k, j) work out
// across threads and reports in deterministic (k, j, n) order.

#include <cstdint>
#include <string>
#include <vector>

namespace gfib::suites {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_lines;  // each names the offending (k, j, n)
  std::vector<std::string> info_lines;     // coverage statistics etc.

  bool passed() const { return failures == 0; }
};

SuiteResult closedform_suite(int k_max, std::int64_t n_max);
SuiteResult valuation_suite(int k_max, std::int64_t n_max);
SuiteResult identities_suite(int k_max, std::int64_t n_max);
SuiteResult residuals_suite(int k_max, std::int64_t n_max);

}  // namespace gfib::suites
