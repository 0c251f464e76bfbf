#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace aos {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VariableRole { generation, flow, angle, generic };
enum class ConstraintSense { less_equal, equal, greater_equal };
enum class ObjectiveSense { minimize, maximize };

const char* to_string(VariableRole role);
const char* to_string(ConstraintSense sense);
const char* to_string(ObjectiveSense sense);

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInf;
  VariableRole role = VariableRole::generic;
};

/// Sparse linear form keyed by variable index. std::map keeps iteration
/// order deterministic, which the serializers rely on.
using LinearExpr = std::map<std::size_t, double>;

struct Constraint {
  std::string name;
  LinearExpr coeffs;
  ConstraintSense sense = ConstraintSense::less_equal;
  double rhs = 0.0;
};

struct Objective {
  ObjectiveSense sense = ObjectiveSense::minimize;
  LinearExpr coeffs;
  double constant = 0.0;
};

/// Largest violation of a point against a model, with the name of the
/// offending constraint or bound ("upper bound of P_1", "balance_3").
struct Violation {
  double amount = 0.0;
  std::string where;
};

/// A linear program over named variables.
///
/// Variable order is declaration order and is observable: projections and
/// reports index points by it. Coefficients always reference declared
/// variables because they are stored by index and validated on insertion.
class LpModel {
 public:
  /// Throws ModelError on a duplicate name or lower > upper.
  std::size_t add_variable(std::string name, double lower, double upper,
                           VariableRole role = VariableRole::generic);

  /// Throws ModelError when a coefficient references an unknown index.
  void add_constraint(Constraint constraint);

  /// Convenience overload keyed by variable name.
  void add_constraint(std::string name,
                      const std::vector<std::pair<std::string, double>>& terms,
                      ConstraintSense sense, double rhs);

  void set_objective(Objective objective);
  void set_bounds(std::size_t index, double lower, double upper);

  [[nodiscard]] const std::vector<Variable>& variables() const { return variables_; }
  [[nodiscard]] const std::vector<Constraint>& constraints() const { return constraints_; }
  [[nodiscard]] const Objective& objective() const { return objective_; }
  [[nodiscard]] std::size_t num_variables() const { return variables_.size(); }

  [[nodiscard]] std::optional<std::size_t> find_variable(std::string_view name) const;
  /// Throws ModelError when the name is unknown.
  [[nodiscard]] std::size_t variable_index(std::string_view name) const;
  [[nodiscard]] std::vector<std::string> variable_names() const;

  [[nodiscard]] bool all_bounds_finite() const;

  [[nodiscard]] double evaluate_objective(std::span<const double> x) const;
  [[nodiscard]] Violation max_violation(std::span<const double> x) const;
  /// Every bound or constraint violated by more than `tol`, in model order.
  [[nodiscard]] std::vector<Violation> violations(std::span<const double> x, double tol) const;

 private:
  template <typename Visit>
  void for_each_residual(std::span<const double> x, Visit&& visit) const;

  std::vector<Variable> variables_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Constraint> constraints_;
  Objective objective_;
};

[[nodiscard]] double evaluate(const LinearExpr& expr, std::span<const double> x);

/// Signed amount by which `activity sense rhs` is violated; 0 when satisfied.
[[nodiscard]] double violation_of(double activity, ConstraintSense sense, double rhs);

}  // namespace aos
