#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewla {

/// Outcome of one acceptance property.
struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  long samples = 0;
  std::string detail;
  double seconds = 0.0;
};

namespace checks {

CheckResult biring_axioms(std::uint64_t seed);
CheckResult transpose_duality(std::uint64_t seed);
CheckResult quasidet_inverse(std::uint64_t seed);
CheckResult eigen_implication(std::uint64_t seed);
CheckResult conjugacy_and_commutation(std::uint64_t seed);
CheckResult central_pair_reduction(std::uint64_t seed);
CheckResult commutative_regression(std::uint64_t seed);
CheckResult exponent_identity(std::uint64_t seed);
CheckResult ode_solutions(std::uint64_t seed);

}  // namespace checks

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr double kSelftestBudgetSeconds = 120.0;

/// Runs properties 1 to 9 in order. Each derives its own generator from `seed`.
std::vector<CheckResult> run_selftest(std::uint64_t seed = kDefaultSeed);

}  // namespace skewla
