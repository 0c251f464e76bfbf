#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aos/dense_matrix.hpp"
#include "aos/lp_model.hpp"

namespace aos {

/// min cost·x  s.t.  A x = rhs,  lower <= x <= upper.
///
/// Columns [0, num_model_vars) are the model variables in declaration order;
/// the remaining columns are one slack per inequality constraint. Rows that
/// are linear combinations of earlier rows are dropped, so A has full row
/// rank. A dropped row whose right-hand side disagrees with the combination
/// sets `inconsistent` and the program is infeasible.
struct StandardForm {
  std::vector<double> cost;
  DenseMatrix A;
  std::vector<double> rhs;
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t num_model_vars = 0;
  /// -1 when the model maximizes; standard objective = sign * model objective.
  double objective_sign = 1.0;
  double objective_constant = 0.0;
  bool inconsistent = false;

  /// For every model constraint: its slack column, or npos for equalities.
  std::vector<std::size_t> slack_column;
  /// For every slack column: +1 for `<=` rows (a·x + s = b), -1 for `>=`.
  std::vector<double> slack_sign;
  /// Model constraint rows that survived redundant-row elimination.
  std::vector<std::size_t> kept_rows;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  [[nodiscard]] std::size_t num_columns() const { return cost.size(); }

  /// Leading model-variable block of a standard-form point.
  [[nodiscard]] std::vector<double> to_model_point(std::span<const double> x) const;
  /// Lifts a model point by computing its slack values.
  [[nodiscard]] std::vector<double> from_model_point(const LpModel& model,
                                                     std::span<const double> x) const;
  /// Objective of the original model (sense and constant restored).
  [[nodiscard]] double model_objective(double standard_value) const {
    return objective_sign * standard_value + objective_constant;
  }
  [[nodiscard]] double standard_objective(std::span<const double> x) const;
};

/// Throws ModelError on an empty model or a variable with lower > upper.
[[nodiscard]] StandardForm to_standard_form(const LpModel& model);

}  // namespace aos
