#include "aos/vertex_enum.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>

#include "../simplex/tableau.hpp"
#include "aos/errors.hpp"
#include "aos/standard_form.hpp"

namespace aos {
namespace {

struct Exploration {
  std::vector<Point> points;
  std::vector<double> objective_values;
  bool truncated = false;
};

VertexSet make_shell(const LpModel& model, const SublevelModel& sub) {
  VertexSet vs;
  vs.model_fingerprint = fingerprint(model);
  vs.variables = model.variable_names();
  vs.tau = sub.tau;
  vs.provably_empty = sub.provably_empty;
  return vs;
}

// Breadth-first search over feasible bases of the sublevel polytope. Stops
// once `stop_after` distinct points have been collected and more remain.
Exploration explore(const LpModel& model, const SublevelModel& sub, std::size_t stop_after,
                    double dedup_tol, std::optional<std::uint64_t> shuffle_seed) {
  if (!sub.model.all_bounds_finite()) {
    throw UnboundedModelError(
        "vertex enumeration needs finite bounds on every variable; call apply_box_bounds first");
  }
  Exploration out;
  const StandardForm sf = to_standard_form(sub.model);
  if (sf.inconsistent) return out;

  const detail::CanonicalLp can = detail::make_canonical(sf);
  SimplexOptions options;
  detail::RunStats stats;
  detail::FeasibleStart start;
  switch (detail::phase_one(can.A, can.b, options, stats, start)) {
    case detail::PhaseOneStatus::infeasible: return out;
    case detail::PhaseOneStatus::numeric_failure:
      throw NumericError("vertex enumeration: phase one lost numerical control");
    case detail::PhaseOneStatus::feasible: break;
  }

  const std::size_t m = start.A.rows();
  const std::size_t n = start.A.cols();
  std::mt19937_64 rng(shuffle_seed.value_or(0));

  auto key_of = [](std::vector<std::size_t> basis) {
    std::sort(basis.begin(), basis.end());
    return basis;
  };
  std::set<std::vector<std::size_t>> visited;
  std::deque<std::vector<std::size_t>> frontier;
  visited.insert(key_of(start.basis));
  frontier.push_back(start.basis);

  auto add_point = [&](Point p) {
    clean_point(p);
    for (const auto& q : out.points) {
      if (points_match(q, p, dedup_tol)) return;
    }
    out.objective_values.push_back(model.evaluate_objective(p));
    out.points.push_back(std::move(p));
  };

  std::vector<char> is_basic(n);
  std::vector<std::pair<std::size_t, std::size_t>> moves;
  while (!frontier.empty()) {
    const auto basis = std::move(frontier.front());
    frontier.pop_front();
    const auto tab = detail::Tableau::factor(start.A, start.b, basis, options.pivot_tol);
    if (!tab) continue;
    const double tol = 1e-9 * (1.0 + tab->max_abs_rhs());
    bool feasible = true;
    for (std::size_t r = 0; r < m; ++r) feasible = feasible && tab->rhs(r) >= -tol;
    if (!feasible) continue;

    auto y = tab->primal();
    for (double& v : y) v = std::max(v, 0.0);
    const auto x = can.recover(y);
    add_point(sf.to_model_point(x));
    if (out.points.size() > stop_after) {
      out.truncated = true;
      return out;
    }

    // Every pivot (r, j) whose resulting basis stays feasible.
    std::fill(is_basic.begin(), is_basic.end(), 0);
    for (std::size_t b : tab->basis()) is_basic[b] = 1;
    moves.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (is_basic[j]) continue;
      for (std::size_t r = 0; r < m; ++r) {
        const double a = tab->at(r, j);
        if (std::abs(a) <= options.pivot_tol) continue;
        const double step = tab->rhs(r) / a;
        bool ok = step >= -tol;
        for (std::size_t k = 0; ok && k < m; ++k) {
          if (k != r && tab->rhs(k) - tab->at(k, j) * step < -tol) ok = false;
        }
        if (ok) moves.emplace_back(r, j);
      }
    }
    if (shuffle_seed) std::shuffle(moves.begin(), moves.end(), rng);
    for (const auto& [r, j] : moves) {
      auto next = tab->basis();
      next[r] = j;
      if (visited.insert(key_of(next)).second) frontier.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

VertexSet enumerate_vertices(const LpModel& model, double z_star, const SublevelSpec& spec,
                             const EnumerationOptions& options) {
  const SublevelModel sub = make_sublevel_model(model, z_star, spec);
  VertexSet vs = make_shell(model, sub);
  Exploration ex = explore(model, sub, options.limit, options.dedup_tol, options.shuffle_seed);
  vs.complete = !ex.truncated;
  vs.points = std::move(ex.points);
  vs.objective_values = std::move(ex.objective_values);
  sort_and_dedup(vs.points, vs.objective_values, options.dedup_tol);
  if (vs.points.size() > options.limit) {
    // The extra point only proves truncation; the report keeps `limit` of them.
    vs.points.resize(options.limit);
    vs.objective_values.resize(options.limit);
  }
  return vs;
}

UniquenessCertificate is_unique_minimizer(const LpModel& model, double z_star,
                                          const SublevelSpec& spec, double dedup_tol) {
  const SublevelModel sub = make_sublevel_model(model, z_star, spec);
  Exploration ex = explore(model, sub, 1, dedup_tol, std::nullopt);
  UniquenessCertificate cert;
  cert.tau = sub.tau;
  cert.complete = !ex.truncated;
  cert.unique = cert.complete && ex.points.size() == 1;
  cert.witnesses = std::move(ex.points);
  std::vector<double> none;
  sort_and_dedup(cert.witnesses, none, dedup_tol);
  return cert;
}

}  // namespace aos
