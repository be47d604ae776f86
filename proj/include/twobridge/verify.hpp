#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twobridge {

/// Size limits for the invariant suite. Each suite enumerates every slope
/// within its bound.
struct VerifyBounds {
  using Int = std::int64_t;
  Int formula_p = 300;
  Int sequence_p = 200;
  Int cancellation_p = 50;
  Int t4_brute_p = 12;
  Int decision_r_p = 20;
  Int decision_s_den = 40;
  /// Fundamental-domain points up to this denominator get their own orbit
  /// search in the uniqueness check.
  Int uniqueness_den = 8;
  Int criterion_r_p = 30;
  Int criterion_s_den = 60;
  Int special_den = 40;
  Int shift_den = 100;
  Int bfs_expansion = 64;

  /// The bounds used by the acceptance run.
  static VerifyBounds acceptance() { return {}; }
  /// Every bound set to n (the triple search capped at 12).
  static VerifyBounds uniform(Int n);
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  /// First failing case, empty on success.
  std::string detail;
};

CheckResult check_worked_examples();
CheckResult check_formula_agreement(const VerifyBounds& b);
CheckResult check_sequence_theorems(const VerifyBounds& b);
CheckResult check_small_cancellation(const VerifyBounds& b);
CheckResult check_decision_oracle(const VerifyBounds& b);
CheckResult check_criterion_equivalences(const VerifyBounds& b);
CheckResult check_special_cases(const VerifyBounds& b);
CheckResult check_automorphism_shift(const VerifyBounds& b);

/// All of the above, in that order.
std::vector<CheckResult> run_verification(const VerifyBounds& b);

}  // namespace twobridge
