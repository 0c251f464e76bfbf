#include "aos/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "tableau.hpp"

namespace aos {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::numeric_failure: return "numeric_failure";
  }
  return "numeric_failure";
}

namespace {

// Worst violation of A x = b and the bounds, relative to the data scale.
bool standard_point_feasible(const StandardForm& sf, std::span<const double> x, double tol) {
  for (std::size_t r = 0; r < sf.A.rows(); ++r) {
    double activity = 0.0;
    double scale = std::abs(sf.rhs[r]);
    for (std::size_t j = 0; j < sf.num_columns(); ++j) {
      activity += sf.A(r, j) * x[j];
      scale = std::max(scale, std::abs(sf.A(r, j) * x[j]));
    }
    if (std::abs(activity - sf.rhs[r]) > tol * (1.0 + scale)) return false;
  }
  for (std::size_t j = 0; j < sf.num_columns(); ++j) {
    if (x[j] < sf.lower[j] - tol * (1.0 + std::abs(sf.lower[j]))) return false;
    if (x[j] > sf.upper[j] + tol * (1.0 + std::abs(sf.upper[j]))) return false;
  }
  return true;
}

}  // namespace

SimplexResult solve(const StandardForm& sf, const SimplexOptions& options) {
  SimplexResult result;
  if (sf.inconsistent) {
    result.status = SolveStatus::infeasible;
    return result;
  }
  for (std::size_t j = 0; j < sf.num_columns(); ++j) {
    if (sf.lower[j] > sf.upper[j]) {
      result.status = SolveStatus::infeasible;
      return result;
    }
  }

  const detail::CanonicalLp can = detail::make_canonical(sf);
  detail::RunStats stats;
  detail::FeasibleStart start;
  switch (detail::phase_one(can.A, can.b, options, stats, start)) {
    case detail::PhaseOneStatus::infeasible:
      result.status = SolveStatus::infeasible;
      result.iterations = stats.iterations;
      return result;
    case detail::PhaseOneStatus::numeric_failure:
      result.status = SolveStatus::numeric_failure;
      result.iterations = stats.iterations;
      return result;
    case detail::PhaseOneStatus::feasible:
      break;
  }

  auto tab = detail::Tableau::factor(start.A, start.b, start.basis, options.pivot_tol);
  if (!tab) {
    result.status = SolveStatus::numeric_failure;
    return result;
  }
  std::vector<char> allowed(can.num_columns(), 1);
  const auto outcome = detail::run_simplex(*tab, can.c, allowed, options, stats);
  result.iterations = stats.iterations;
  result.bland_engaged = stats.bland_engaged;

  if (outcome.status == detail::RunStatus::iteration_limit) {
    result.status = SolveStatus::numeric_failure;
    return result;
  }
  if (outcome.status == detail::RunStatus::unbounded) {
    std::vector<double> d(can.num_columns(), 0.0);
    d[outcome.entering] = 1.0;
    for (std::size_t r = 0; r < tab->rows(); ++r) d[tab->basis()[r]] = -tab->at(r, outcome.entering);
    result.status = SolveStatus::unbounded;
    result.ray = sf.to_model_point(can.recover_direction(d));
    return result;
  }

  // Recompute the vertex from the final basis rather than trusting the
  // accumulated pivots.
  const auto fresh = detail::Tableau::factor(start.A, start.b, tab->basis(), options.pivot_tol);
  if (!fresh) {
    result.status = SolveStatus::numeric_failure;
    return result;
  }
  auto y = fresh->primal();
  const double y_tol = options.feasibility_tol * (1.0 + fresh->max_abs_rhs());
  for (double& v : y) {
    if (v < -y_tol) {
      result.status = SolveStatus::numeric_failure;
      return result;
    }
    v = std::max(v, 0.0);
  }
  const auto x = can.recover(y);
  if (!standard_point_feasible(sf, x, options.feasibility_tol)) {
    result.status = SolveStatus::numeric_failure;
    return result;
  }
  result.status = SolveStatus::optimal;
  result.x_star = sf.to_model_point(x);
  result.z_star = sf.model_objective(sf.standard_objective(x));
  result.basis = fresh->basis();
  std::sort(result.basis.begin(), result.basis.end());
  return result;
}

SimplexResult solve(const LpModel& model, const SimplexOptions& options) {
  return solve(to_standard_form(model), options);
}

}  // namespace aos
