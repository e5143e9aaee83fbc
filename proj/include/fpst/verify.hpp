#pragma once

#include <string>
#include <vector>

namespace fpst::verify {

struct CheckResult {
  std::string id;  // "C1".."C12" for acceptance criteria, "I:<name>" for invariants
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr int kCriterionCount = 12;

/// Runs acceptance criterion `id` (1..12). Library errors inside a check
/// become a failed result rather than escaping.
[[nodiscard]] CheckResult run_criterion(int id);
[[nodiscard]] std::vector<CheckResult> run_acceptance();

/// Property checks of the individual modules (recurrences, identities,
/// oracle equivalence on random inputs).
[[nodiscard]] std::vector<CheckResult> run_invariants();

/// Acceptance criteria followed by the invariants.
[[nodiscard]] std::vector<CheckResult> run_all();

}  // namespace fpst::verify
