#pragma once

#include <string>
#include <vector>

#include "aos/lp_model.hpp"

namespace aos {

inline constexpr double kDefaultBoxBound = 1e4;

/// Level value given either absolutely or as a relative gap above z*.
class SublevelSpec {
 public:
  enum class Mode { absolute, relative_gap };

  static SublevelSpec absolute(double tau) { return {Mode::absolute, tau}; }
  /// Throws ModelError when gap < 0.
  static SublevelSpec relative_gap(double gap);

  [[nodiscard]] Mode mode() const { return mode_; }
  [[nodiscard]] double value() const { return value_; }

  /// Minimization: tau = z* + gap * max(1, |z*|). Maximization mirrors it:
  /// tau = z* - gap * max(1, |z*|).
  [[nodiscard]] double resolve(double z_star, ObjectiveSense sense) const;

 private:
  SublevelSpec(Mode mode, double value) : mode_(mode), value_(value) {}
  Mode mode_;
  double value_;
};

struct SublevelModel {
  LpModel model;
  double tau = 0.0;
  /// tau is strictly worse-than-optimal in the wrong direction (tau < z* for
  /// minimization), so the set is empty by construction.
  bool provably_empty = false;
};

/// Appends `objective <= tau` (`>= tau` when maximizing) as the last
/// constraint, named "sublevel". Variables and objective are untouched.
[[nodiscard]] SublevelModel make_sublevel_model(const LpModel& model, double z_star,
                                                const SublevelSpec& spec);

struct BoxedModel {
  LpModel model;
  std::vector<std::string> boxed_variables;
};

/// Replaces every infinite bound by -bound / +bound. Throws ModelError
/// when bound <= 0.
[[nodiscard]] BoxedModel apply_box_bounds(const LpModel& model, double bound = kDefaultBoxBound);

}  // namespace aos
