#pragma once

#include <string>
#include <vector>

namespace nclab {

/// One checked identity over a range of sizes.
struct CheckResult {
  std::string suite;
  std::string name;
  std::string range;  // e.g. "n=1..8"
  bool passed = false;
  std::string detail;
};

// Exhaustive identity suites. Expensive quadratic filters are capped at the
// sizes noted in each check's `range`.
std::vector<CheckResult> verify_bijection(int n_max);
std::vector<CheckResult> verify_counts(int n_max);
std::vector<CheckResult> verify_moments(int n_max);
std::vector<CheckResult> verify_all(int n_max);

}  // namespace nclab
