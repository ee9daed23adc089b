#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbitvol {

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelfTestOptions {
  std::uint64_t seed = 20260809;
  long long mc_samples = 1'000'000;
  /// Fault-injection hook: flips one Weyl sign in a locally generated group
  /// before verification, to prove the suite catches corrupted data.
  bool corrupt_weyl_sign = false;
};

/// Runs the full cross-oracle and invariant suite; one result per criterion.
std::vector<CheckResult> run_acceptance_suite(const SelfTestOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace orbitvol
