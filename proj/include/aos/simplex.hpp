#pragma once

#include <cstddef>
#include <vector>

#include "aos/lp_model.hpp"
#include "aos/standard_form.hpp"

namespace aos {

enum class SolveStatus { optimal, infeasible, unbounded, numeric_failure };

const char* to_string(SolveStatus status);

struct SimplexOptions {
  double pivot_tol = 1e-9;
  double feasibility_tol = 1e-7;
  double optimality_tol = 1e-9;
  /// Bland's rule takes over after this many consecutive degenerate pivots
  /// per row (the threshold is bland_factor * rows).
  std::size_t bland_factor = 50;
  std::size_t max_iterations = 200000;
};

struct SimplexResult {
  SolveStatus status = SolveStatus::numeric_failure;
  /// Model-variable coordinates (slacks dropped).
  std::vector<double> x_star;
  /// Objective in the model's own sense, constant included.
  double z_star = 0.0;
  /// Basic columns of the solver's internal nonnegative form.
  std::vector<std::size_t> basis;
  std::size_t iterations = 0;
  bool bland_engaged = false;
  /// Improving direction in model-variable space when unbounded.
  std::vector<double> ray;

  [[nodiscard]] bool optimal() const { return status == SolveStatus::optimal; }
};

/// Two-phase dense simplex. Dantzig pricing, switching to Bland's rule when
/// degenerate pivots stall. Loss of numerical control is reported as
/// numeric_failure, never as a wrong optimum.
[[nodiscard]] SimplexResult solve(const StandardForm& sf, const SimplexOptions& options = {});
[[nodiscard]] SimplexResult solve(const LpModel& model, const SimplexOptions& options = {});

}  // namespace aos
