#include "aos/binary.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "aos/errors.hpp"

namespace aos {
namespace {

constexpr double kIntegralityTol = 1e-6;

struct Node {
  std::vector<std::pair<double, double>> bounds;  // per binary var
};

std::vector<std::size_t> binary_indices(const LpModel& model,
                                        const std::vector<std::string>& binary_vars) {
  std::vector<std::size_t> idx;
  idx.reserve(binary_vars.size());
  for (const auto& name : binary_vars) {
    const std::size_t j = model.variable_index(name);
    const auto& v = model.variables()[j];
    if (v.lower < 0.0 || v.upper > 1.0) {
      throw ModelError("binary variable '" + name + "' has bounds outside [0, 1]");
    }
    idx.push_back(j);
  }
  return idx;
}

bool within_level(double z, double tau, ObjectiveSense sense) {
  const double tol = 1e-9 * std::max(1.0, std::abs(tau));
  return sense == ObjectiveSense::minimize ? z <= tau + tol : z >= tau - tol;
}

}  // namespace

SimplexResult solve_binary(const LpModel& model, const std::vector<std::string>& binary_vars,
                           const SimplexOptions& options) {
  const auto idx = binary_indices(model, binary_vars);
  const double sign = model.objective().sense == ObjectiveSense::maximize ? -1.0 : 1.0;

  // Branch on the lowest model index first.
  std::vector<std::size_t> order(idx.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return idx[a] < idx[b]; });

  SimplexResult best;
  best.status = SolveStatus::infeasible;
  double best_value = kInf;
  std::size_t iterations = 0;

  std::vector<Node> stack;
  Node root;
  for (std::size_t j : idx) root.bounds.emplace_back(model.variables()[j].lower, model.variables()[j].upper);
  stack.push_back(std::move(root));

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();

    LpModel relaxed = model;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      relaxed.set_bounds(idx[k], node.bounds[k].first, node.bounds[k].second);
    }
    SimplexResult lp = solve(relaxed, options);
    iterations += lp.iterations;
    if (lp.status == SolveStatus::infeasible) continue;
    if (lp.status != SolveStatus::optimal) {
      lp.iterations = iterations;
      return lp;
    }
    const double value = sign * lp.z_star;
    if (value >= best_value - 1e-9 * (1.0 + std::abs(best_value))) continue;

    std::size_t branch = idx.size();
    for (std::size_t k : order) {
      const double v = lp.x_star[idx[k]];
      if (std::abs(v - std::round(v)) > kIntegralityTol) {
        branch = k;
        break;
      }
    }
    if (branch == idx.size()) {
      for (std::size_t j : idx) lp.x_star[j] = std::round(lp.x_star[j]);
      lp.z_star = model.evaluate_objective(lp.x_star);
      best_value = sign * lp.z_star;
      best = std::move(lp);
      continue;
    }
    Node zero = node;
    Node one = std::move(node);
    zero.bounds[branch] = {0.0, 0.0};
    one.bounds[branch] = {1.0, 1.0};
    stack.push_back(std::move(one));
    stack.push_back(std::move(zero));
  }
  best.iterations = iterations;
  return best;
}

BinarySolutionPool enumerate_binary(const LpModel& model, const std::vector<std::string>& binary_vars,
                                    const SublevelSpec& spec, std::size_t limit,
                                    const SimplexOptions& options) {
  if (limit == 0) throw ModelError("enumerate_binary: limit must be >= 1");
  const auto idx = binary_indices(model, binary_vars);
  const ObjectiveSense sense = model.objective().sense;

  BinarySolutionPool pool;
  pool.binary_vars = binary_vars;
  LpModel work = model;
  bool have_tau = false;

  for (;;) {
    SimplexResult res = solve_binary(work, binary_vars, options);
    if (res.status == SolveStatus::infeasible) {
      pool.exhausted = true;
      break;
    }
    if (res.status != SolveStatus::optimal) {
      throw NumericError(std::string("enumerate_binary: solver reported ") + to_string(res.status));
    }
    if (!have_tau) {
      pool.tau = spec.resolve(res.z_star, sense);
      have_tau = true;
    }
    if (!within_level(res.z_star, pool.tau, sense)) {
      pool.exhausted = true;
      break;
    }
    BinarySolution sol;
    sol.objective = res.z_star;
    sol.x = res.x_star;
    Constraint cut;
    cut.name = "no_good_" + std::to_string(pool.solutions.size());
    cut.sense = ConstraintSense::greater_equal;
    cut.rhs = 1.0;
    for (std::size_t j : idx) {
      const int bit = res.x_star[j] > 0.5 ? 1 : 0;
      sol.assignment.push_back(bit);
      if (bit == 1) {
        cut.coeffs[j] -= 1.0;
        cut.rhs -= 1.0;
      } else {
        cut.coeffs[j] += 1.0;
      }
    }
    pool.solutions.push_back(std::move(sol));
    if (pool.solutions.size() >= limit) break;
    work.add_constraint(std::move(cut));
  }
  if (!have_tau && spec.mode() == SublevelSpec::Mode::absolute) pool.tau = spec.value();

  const double sign = sense == ObjectiveSense::maximize ? -1.0 : 1.0;
  std::stable_sort(pool.solutions.begin(), pool.solutions.end(),
                   [sign](const BinarySolution& a, const BinarySolution& b) {
                     const double va = sign * a.objective;
                     const double vb = sign * b.objective;
                     const double tol = 1e-9 * std::max({1.0, std::abs(va), std::abs(vb)});
                     if (std::abs(va - vb) > tol) return va < vb;
                     return a.assignment < b.assignment;
                   });
  return pool;
}

}  // namespace aos
