#include "aos/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aos/errors.hpp"

namespace aos {

const char* to_string(SetRelation relation) {
  switch (relation) {
    case SetRelation::equal: return "equal";
    case SetRelation::a_subset_b: return "a_subset_b";
    case SetRelation::b_subset_a: return "b_subset_a";
    case SetRelation::incomparable: return "incomparable";
  }
  return "incomparable";
}

ContainmentPair check_containment(const VertexSet& points, const ProjectionSpec& projection,
                                  const LpModel& relaxed_model, double z_star,
                                  const SublevelSpec& spec, double tol) {
  const SublevelModel sub = make_sublevel_model(relaxed_model, z_star, spec);
  const auto idx = projection.resolve(points.variables);
  if (idx.size() != relaxed_model.num_variables()) {
    throw DimensionError("projection yields " + std::to_string(idx.size()) +
                         " coordinates but the relaxed model has " +
                         std::to_string(relaxed_model.num_variables()) + " variables");
  }
  ContainmentPair pair;
  pair.tau = sub.tau;
  for (const auto& p : points.points) {
    ProjectedPointCheck check;
    check.source = p;
    for (std::size_t i : idx) check.projected.push_back(p[i]);
    const Violation v = sub.model.max_violation(check.projected);
    check.violation = v.amount;
    check.contained = v.amount <= tol;
    for (const auto& bad : sub.model.violations(check.projected, tol)) check.violated.push_back(bad.where);
    pair.max_violation = std::max(pair.max_violation, v.amount);
    pair.pass = pair.pass && check.contained;
    pair.points.push_back(std::move(check));
  }
  return pair;
}

ChainResult verify_relaxation_chain(const Network& net, const SublevelSpec& spec,
                                    const ChainOptions& options) {
  ChainResult chain;
  const LpModel dc = build_dcopf(net);
  const LpModel nf = build_network_flow(net);
  const LpModel cp = build_copper_plate(net);

  const SimplexResult base = solve(dc);
  chain.base_status = base.status;
  if (!base.optimal()) return chain;
  chain.z_star = base.z_star;
  chain.tau = spec.resolve(base.z_star, dc.objective().sense);
  // One level value for every model, fixed by the DC-OPF optimum.
  const SublevelSpec level = SublevelSpec::absolute(chain.tau);

  VertexSet dc_set =
      enumerate_vertices(apply_box_bounds(dc, options.box_bound).model, base.z_star, level, options.enumeration);
  const VertexSet nf_set =
      enumerate_vertices(apply_box_bounds(nf, options.box_bound).model, base.z_star, level, options.enumeration);

  if (options.inject_violation) {
    Point bad = dc_set.empty() ? Point(dc.num_variables(), 0.0) : dc_set.points.front();
    for (BusId b : net.buses) {
      const Generator g = net.generator_at(b);
      if (g.capacity > 0.0) {
        bad[dc.variable_index(generation_name(b))] = g.capacity + 1.0;
        break;
      }
    }
    dc_set.points.push_back(std::move(bad));
    dc_set.objective_values.clear();
  }

  auto run = [&](const char* name, const VertexSet& from, const LpModel& onto) {
    ContainmentPair pair = check_containment(from, ProjectionSpec::onto(onto), onto, base.z_star, level);
    pair.name = name;
    chain.report.pass = chain.report.pass && pair.pass;
    chain.report.pairs.push_back(std::move(pair));
  };
  run("dcopf->nf", dc_set, nf);
  run("dcopf->cp", dc_set, cp);
  run("nf->cp", nf_set, cp);
  return chain;
}

bool is_in_convex_hull(const Point& q, const std::vector<Point>& generators) {
  if (generators.empty()) throw DimensionError("convex hull membership needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != q.size()) throw DimensionError("generator dimension differs from the query point");
  }
  LpModel lp;
  Constraint weights{"weights", {}, ConstraintSense::equal, 1.0};
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const std::size_t idx = lp.add_variable("lambda_" + std::to_string(i), 0.0, kInf);
    weights.coeffs[idx] = 1.0;
  }
  lp.add_constraint(std::move(weights));
  for (std::size_t d = 0; d < q.size(); ++d) {
    Constraint row{"coord_" + std::to_string(d), {}, ConstraintSense::equal, q[d]};
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i][d] != 0.0) row.coeffs[i] = generators[i][d];
    }
    lp.add_constraint(std::move(row));
  }
  const SimplexResult res = solve(lp);
  switch (res.status) {
    case SolveStatus::optimal: return true;
    case SolveStatus::infeasible: return false;
    default: throw NumericError(std::string("hull membership LP: ") + to_string(res.status));
  }
}

namespace {

bool values_tie(double a, double b) {
  return a == b || std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b));
}

RankedAlternatives rank_values(const VertexSet& vs, const std::vector<double>& values, ObjectiveSense sense) {
  RankedAlternatives ranked;
  ranked.source = vs;
  ranked.sense = sense;
  for (std::size_t i = 0; i < vs.points.size(); ++i) {
    ranked.entries.push_back(RankedEntry{vs.points[i], values[i], i});
  }
  const bool maximize = sense == ObjectiveSense::maximize;
  std::stable_sort(ranked.entries.begin(), ranked.entries.end(),
                   [maximize](const RankedEntry& a, const RankedEntry& b) {
                     if (!values_tie(a.value, b.value)) return maximize ? a.value > b.value : a.value < b.value;
                     return a.point < b.point;
                   });
  return ranked;
}

}  // namespace

RankedAlternatives rank_alternatives(const VertexSet& vs, const SecondaryObjective& secondary) {
  std::vector<std::pair<std::size_t, double>> terms;
  for (const auto& [name, coeff] : secondary.coeffs) {
    auto it = std::find(vs.variables.begin(), vs.variables.end(), name);
    if (it == vs.variables.end()) {
      throw DimensionError("secondary objective references unknown variable '" + name + "'");
    }
    terms.emplace_back(static_cast<std::size_t>(it - vs.variables.begin()), coeff);
  }
  std::vector<double> values;
  for (const auto& p : vs.points) {
    double v = secondary.constant;
    for (const auto& [i, c] : terms) v += c * p[i];
    values.push_back(v);
  }
  return rank_values(vs, values, secondary.sense);
}

RankedAlternatives rank_by_scores(const VertexSet& vs, const std::vector<double>& scores,
                                  ObjectiveSense sense) {
  if (scores.size() != vs.points.size()) {
    throw DimensionError("expected one score per point (" + std::to_string(vs.points.size()) + ")");
  }
  return rank_values(vs, scores, sense);
}

SetRelation compare_projected_sets(const VertexSet& a, const VertexSet& b, double dedup_tol) {
  auto covered = [dedup_tol](const VertexSet& small, const VertexSet& big) {
    return std::all_of(small.points.begin(), small.points.end(), [&](const Point& p) {
      return std::any_of(big.points.begin(), big.points.end(),
                         [&](const Point& q) { return points_match(p, q, dedup_tol); });
    });
  };
  const bool a_in_b = covered(a, b);
  const bool b_in_a = covered(b, a);
  if (a_in_b && b_in_a) return SetRelation::equal;
  if (a_in_b) return SetRelation::a_subset_b;
  if (b_in_a) return SetRelation::b_subset_a;
  return SetRelation::incomparable;
}

}  // namespace aos
