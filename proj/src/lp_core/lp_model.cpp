#include "aos/lp_model.hpp"

#include <algorithm>
#include <cmath>

#include "aos/errors.hpp"

namespace aos {

const char* to_string(VariableRole role) {
  switch (role) {
    case VariableRole::generation: return "generation";
    case VariableRole::flow: return "flow";
    case VariableRole::angle: return "angle";
    case VariableRole::generic: return "generic";
  }
  return "generic";
}

const char* to_string(ConstraintSense sense) {
  switch (sense) {
    case ConstraintSense::less_equal: return "<=";
    case ConstraintSense::equal: return "==";
    case ConstraintSense::greater_equal: return ">=";
  }
  return "<=";
}

const char* to_string(ObjectiveSense sense) {
  return sense == ObjectiveSense::minimize ? "min" : "max";
}

std::size_t LpModel::add_variable(std::string name, double lower, double upper,
                                  VariableRole role) {
  if (name.empty()) throw ModelError("variable name must not be empty");
  if (index_.contains(name)) throw ModelError("duplicate variable name '" + name + "'");
  if (std::isnan(lower) || std::isnan(upper) || lower > upper) {
    throw ModelError("variable '" + name + "' has lower > upper");
  }
  const std::size_t idx = variables_.size();
  index_.emplace(name, idx);
  variables_.push_back(Variable{std::move(name), lower, upper, role});
  return idx;
}

void LpModel::add_constraint(Constraint constraint) {
  for (const auto& [idx, coeff] : constraint.coeffs) {
    if (idx >= variables_.size()) {
      throw ModelError("constraint '" + constraint.name + "' references undeclared variable");
    }
    if (!std::isfinite(coeff)) {
      throw ModelError("constraint '" + constraint.name + "' has a non-finite coefficient");
    }
  }
  if (!std::isfinite(constraint.rhs)) {
    throw ModelError("constraint '" + constraint.name + "' has a non-finite right-hand side");
  }
  constraints_.push_back(std::move(constraint));
}

void LpModel::add_constraint(std::string name,
                             const std::vector<std::pair<std::string, double>>& terms,
                             ConstraintSense sense, double rhs) {
  Constraint c{std::move(name), {}, sense, rhs};
  for (const auto& [var, coeff] : terms) c.coeffs[variable_index(var)] += coeff;
  add_constraint(std::move(c));
}

void LpModel::set_objective(Objective objective) {
  for (const auto& [idx, coeff] : objective.coeffs) {
    if (idx >= variables_.size()) throw ModelError("objective references undeclared variable");
    if (!std::isfinite(coeff)) throw ModelError("objective has a non-finite coefficient");
  }
  objective_ = std::move(objective);
}

void LpModel::set_bounds(std::size_t index, double lower, double upper) {
  if (index >= variables_.size()) throw ModelError("set_bounds: index out of range");
  if (std::isnan(lower) || std::isnan(upper) || lower > upper) {
    throw ModelError("variable '" + variables_[index].name + "' has lower > upper");
  }
  variables_[index].lower = lower;
  variables_[index].upper = upper;
}

std::optional<std::size_t> LpModel::find_variable(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LpModel::variable_index(std::string_view name) const {
  auto idx = find_variable(name);
  if (!idx) throw ModelError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

std::vector<std::string> LpModel::variable_names() const {
  std::vector<std::string> names;
  names.reserve(variables_.size());
  for (const auto& v : variables_) names.push_back(v.name);
  return names;
}

bool LpModel::all_bounds_finite() const {
  return std::all_of(variables_.begin(), variables_.end(), [](const Variable& v) {
    return std::isfinite(v.lower) && std::isfinite(v.upper);
  });
}

double evaluate(const LinearExpr& expr, std::span<const double> x) {
  double sum = 0.0;
  for (const auto& [idx, coeff] : expr) sum += coeff * x[idx];
  return sum;
}

double violation_of(double activity, ConstraintSense sense, double rhs) {
  switch (sense) {
    case ConstraintSense::less_equal: return std::max(0.0, activity - rhs);
    case ConstraintSense::greater_equal: return std::max(0.0, rhs - activity);
    case ConstraintSense::equal: return std::abs(activity - rhs);
  }
  return 0.0;
}

double LpModel::evaluate_objective(std::span<const double> x) const {
  return evaluate(objective_.coeffs, x) + objective_.constant;
}

template <typename Visit>
void LpModel::for_each_residual(std::span<const double> x, Visit&& visit) const {
  if (x.size() != variables_.size()) {
    throw ModelError("point has " + std::to_string(x.size()) + " coordinates, model has " +
                     std::to_string(variables_.size()) + " variables");
  }
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    const auto& v = variables_[j];
    visit(v.lower - x[j], [&] { return "lower bound of " + v.name; });
    visit(x[j] - v.upper, [&] { return "upper bound of " + v.name; });
  }
  for (const auto& c : constraints_) {
    visit(violation_of(evaluate(c.coeffs, x), c.sense, c.rhs), [&] { return c.name; });
  }
}

Violation LpModel::max_violation(std::span<const double> x) const {
  Violation worst;
  for_each_residual(x, [&worst](double amount, auto&& describe) {
    if (amount > worst.amount) worst = Violation{amount, describe()};
  });
  return worst;
}

std::vector<Violation> LpModel::violations(std::span<const double> x, double tol) const {
  std::vector<Violation> out;
  for_each_residual(x, [&out, tol](double amount, auto&& describe) {
    if (amount > tol) out.push_back(Violation{amount, describe()});
  });
  return out;
}

}  // namespace aos
