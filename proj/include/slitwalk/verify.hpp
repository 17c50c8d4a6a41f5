#pragma once

// Named cross-checks: symbolic pipeline against enumeration and closed
// forms. Used by the `verify` subcommand and the acceptance binary.

#include <functional>
#include <string>
#include <vector>

#include "slitwalk/model.hpp"

namespace slitwalk {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no time limit
};

struct VerifyReport {
  std::string model;
  int order = 0;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Identity suite for one model at one truncation order.
VerifyReport verify_model(const StepSet& m, int order);

// Criterion checks, numbered 1..11.
int acceptance_count();
std::string acceptance_name(int criterion);
CheckResult run_acceptance(int criterion);
std::vector<CheckResult> run_all_acceptance();

// Runs fn, timing it. fn returns true on success and may write to detail.
// Library errors become failures with the message in detail;
// ResourceGuardExceeded propagates.
CheckResult timed_check(const std::string& name, double limit_seconds,
                        const std::function<bool(std::string&)>& fn);

// Deterministic pseudo-random valid weighted model (dx in [-2, 2], |dy| <= 1).
StepSet random_model(unsigned seed);

}  // namespace slitwalk
