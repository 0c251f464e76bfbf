#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aos/lp_model.hpp"
#include "aos/simplex.hpp"
#include "aos/sublevel.hpp"

namespace aos {

/// Depth-first LP-based branch and bound over the named binary variables.
/// Branches on the lowest-index fractional variable, 0-branch first.
/// Throws ModelError when a binary variable has bounds outside [0, 1].
[[nodiscard]] SimplexResult solve_binary(const LpModel& model,
                                         const std::vector<std::string>& binary_vars,
                                         const SimplexOptions& options = {});

struct BinarySolution {
  std::vector<int> assignment;  // over binary_vars, in the given order
  double objective = 0.0;
  std::vector<double> x;  // full model point
};

struct BinarySolutionPool {
  std::vector<std::string> binary_vars;
  /// Best objective first (non-decreasing for minimization), ties broken
  /// lexicographically on the assignment.
  std::vector<BinarySolution> solutions;
  double tau = 0.0;
  bool exhausted = false;
};

/// No-good-cut enumeration: solve, record, cut off the assignment with
/// sum_{x*_j=1}(1 - x_j) + sum_{x*_j=0} x_j >= 1, repeat. Stops when the
/// next optimum is worse than tau, the model becomes infeasible, or `limit`
/// solutions are pooled. Cuts touch binary variables only, so continuous
/// variables are free to differ between pool entries.
///
/// Throws NumericError when a solve fails numerically.
[[nodiscard]] BinarySolutionPool enumerate_binary(const LpModel& model,
                                                  const std::vector<std::string>& binary_vars,
                                                  const SublevelSpec& spec, std::size_t limit,
                                                  const SimplexOptions& options = {});

}  // namespace aos
