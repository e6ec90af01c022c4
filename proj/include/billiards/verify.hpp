#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace billiards {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  double worst = 0.0;  // largest violation seen (<= 0 when passing)
  bool pass = false;
};

// Property suites shared by the verify CLI subcommand and the acceptance
// tests.  `cases` scales the sample counts; the defaults used by the
// acceptance suite are the per-suite counts with cases = 0.
SuiteResult run_lipschitz_suite(std::uint64_t seed, int cases);
SuiteResult run_monotonicity_suite(std::uint64_t seed, int cases);
SuiteResult run_similarity_suite(std::uint64_t seed, int cases);
SuiteResult run_oracle_suite(std::uint64_t seed, int cases, int N);
SuiteResult run_dual_formula_suite(std::uint64_t seed, int cases);
SuiteResult run_involution_suite(std::uint64_t seed, int cases);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int cases);

}  // namespace billiards
