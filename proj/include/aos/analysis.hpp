#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aos/lp_model.hpp"
#include "aos/network.hpp"
#include "aos/projection.hpp"
#include "aos/simplex.hpp"
#include "aos/sublevel.hpp"
#include "aos/vertex_enum.hpp"
#include "aos/vertex_set.hpp"

namespace aos {

inline constexpr double kContainmentTol = 1e-6;

struct ProjectedPointCheck {
  Point source;
  Point projected;
  double violation = 0.0;
  std::vector<std::string> violated;  // names of every violated bound or constraint
  bool contained = true;
};

/// One "projected source set is inside the relaxed sublevel set" check.
struct ContainmentPair {
  std::string name;  // e.g. "dcopf->nf"
  double tau = 0.0;
  std::vector<ProjectedPointCheck> points;
  double max_violation = 0.0;
  bool pass = true;
};

struct ContainmentReport {
  std::vector<ContainmentPair> pairs;
  bool pass = true;
};

/// Projects every point and evaluates it against every constraint and bound
/// of S(g, relaxed_model, tau). Pointwise evaluation only; the relaxed set
/// is never enumerated. Throws DimensionError when the projected dimension
/// differs from the relaxed model's.
[[nodiscard]] ContainmentPair check_containment(const VertexSet& points,
                                                const ProjectionSpec& projection,
                                                const LpModel& relaxed_model, double z_star,
                                                const SublevelSpec& spec,
                                                double tol = kContainmentTol);

struct ChainOptions {
  double box_bound = kDefaultBoxBound;
  EnumerationOptions enumeration;
  /// Test hook: appends a point with P at the first generator bus pushed one
  /// unit above capacity to the DC-OPF set.
  bool inject_violation = false;
};

struct ChainResult {
  SolveStatus base_status = SolveStatus::numeric_failure;
  double z_star = 0.0;
  double tau = 0.0;
  ContainmentReport report;
};

/// DC->NF over (P, f), DC->CP over P, NF->CP over P at one shared tau,
/// resolved from the DC-OPF optimum.
[[nodiscard]] ChainResult verify_relaxation_chain(const Network& net, const SublevelSpec& spec,
                                                  const ChainOptions& options = {});

/// Convex-combination membership LP solved with the simplex module.
/// Throws DimensionError on empty generators or mismatched dimensions and
/// NumericError when the LP fails numerically.
[[nodiscard]] bool is_in_convex_hull(const Point& q, const std::vector<Point>& generators);

struct SecondaryObjective {
  ObjectiveSense sense = ObjectiveSense::maximize;
  std::vector<std::pair<std::string, double>> coeffs;
  double constant = 0.0;
};

struct RankedEntry {
  Point point;
  double value = 0.0;
  std::size_t source_index = 0;
};

struct RankedAlternatives {
  VertexSet source;
  ObjectiveSense sense = ObjectiveSense::maximize;
  /// Best first. Values within a relative 1e-9 are ties, broken by the
  /// lexicographic order of the points.
  std::vector<RankedEntry> entries;

  [[nodiscard]] const RankedEntry& best() const { return entries.front(); }
  [[nodiscard]] const RankedEntry& worst() const { return entries.back(); }
};

/// Throws DimensionError when the secondary objective names a variable that
/// is not in the set's space.
[[nodiscard]] RankedAlternatives rank_alternatives(const VertexSet& vs,
                                                   const SecondaryObjective& secondary);
/// Ranks by externally computed per-point scores (one per point).
[[nodiscard]] RankedAlternatives rank_by_scores(const VertexSet& vs,
                                                const std::vector<double>& scores,
                                                ObjectiveSense sense);

enum class SetRelation { equal, a_subset_b, b_subset_a, incomparable };
const char* to_string(SetRelation relation);

[[nodiscard]] SetRelation compare_projected_sets(const VertexSet& a, const VertexSet& b,
                                                 double dedup_tol = kDefaultDedupTol);

}  // namespace aos
