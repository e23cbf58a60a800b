#pragma once

#include <string>
#include <string_view>
#include <vector>

// Named, exhaustive self-checks behind `cycdesc verify`.

namespace cycdesc {

struct VerifyReport {
  std::string suite;
  int max_n = 0;  // after clamping to the suite's cap
  bool passed = true;
  long long checks = 0;
  std::string first_failure;  // empty when passed
};

/// oracle, inversions, corollaries, lyndon, patterns, bounds.
const std::vector<std::string_view>& verify_suites();

/// Largest max_n a suite accepts.
int verify_cap(std::string_view suite);

/// Runs one suite for every n in [1, max_n] (bounds starts at 2). Throws
/// std::domain_error on an unknown suite and CapacityError when max_n
/// exceeds its cap.
VerifyReport run_suite(std::string_view suite, int max_n);

/// Every suite, each with max_n clamped to its cap.
std::vector<VerifyReport> run_all(int max_n);

}  // namespace cycdesc
