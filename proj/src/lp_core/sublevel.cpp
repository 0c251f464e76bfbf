#include "aos/sublevel.hpp"

#include <algorithm>
#include <cmath>

#include "aos/errors.hpp"

namespace aos {

SublevelSpec SublevelSpec::relative_gap(double gap) {
  if (!(gap >= 0.0)) throw ModelError("relative gap must be >= 0");
  return {Mode::relative_gap, gap};
}

double SublevelSpec::resolve(double z_star, ObjectiveSense sense) const {
  if (mode_ == Mode::absolute) return value_;
  const double slack = value_ * std::max(1.0, std::abs(z_star));
  return sense == ObjectiveSense::minimize ? z_star + slack : z_star - slack;
}

SublevelModel make_sublevel_model(const LpModel& model, double z_star, const SublevelSpec& spec) {
  const auto& obj = model.objective();
  const double tau = spec.resolve(z_star, obj.sense);
  const bool minimize = obj.sense == ObjectiveSense::minimize;

  SublevelModel out{model, tau, minimize ? tau < z_star : tau > z_star};
  out.model.add_constraint(Constraint{
      "sublevel", obj.coeffs,
      minimize ? ConstraintSense::less_equal : ConstraintSense::greater_equal,
      tau - obj.constant});
  return out;
}

BoxedModel apply_box_bounds(const LpModel& model, double bound) {
  if (!(bound > 0.0) || !std::isfinite(bound)) throw ModelError("box bound must be positive");
  BoxedModel out{model, {}};
  for (std::size_t j = 0; j < model.num_variables(); ++j) {
    const auto& v = model.variables()[j];
    if (std::isfinite(v.lower) && std::isfinite(v.upper)) continue;
    // A finite bound outside the box stays; the box only closes open ends.
    const double lo = std::isfinite(v.lower) ? v.lower : std::min(-bound, v.upper);
    const double hi = std::isfinite(v.upper) ? v.upper : std::max(bound, v.lower);
    out.model.set_bounds(j, lo, hi);
    out.boxed_variables.push_back(v.name);
  }
  return out;
}

}  // namespace aos
