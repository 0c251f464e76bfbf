#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "aos/errors.hpp"
#include "aos/vertex_enum.hpp"

namespace aos {
namespace {

struct Hyperplane {
  Eigen::VectorXd normal;
  double offset = 0.0;
};

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

bool feasible(const LpModel& model, const Eigen::VectorXd& x) {
  constexpr double tol = 1e-7;
  for (std::size_t j = 0; j < model.num_variables(); ++j) {
    const auto& v = model.variables()[j];
    const double xj = x(static_cast<Eigen::Index>(j));
    if (xj < v.lower - tol * (1.0 + std::abs(v.lower))) return false;
    if (xj > v.upper + tol * (1.0 + std::abs(v.upper))) return false;
  }
  for (const auto& c : model.constraints()) {
    double activity = 0.0;
    for (const auto& [idx, coeff] : c.coeffs) activity += coeff * x(static_cast<Eigen::Index>(idx));
    if (violation_of(activity, c.sense, c.rhs) > tol * (1.0 + std::abs(c.rhs))) return false;
  }
  return true;
}

}  // namespace

VertexSet brute_force_vertices(const LpModel& model, double z_star, const SublevelSpec& spec,
                               double dedup_tol) {
  const SublevelModel sub = make_sublevel_model(model, z_star, spec);
  const auto n = static_cast<Eigen::Index>(model.num_variables());

  VertexSet vs;
  vs.model_fingerprint = fingerprint(model);
  vs.variables = model.variable_names();
  vs.tau = sub.tau;
  vs.provably_empty = sub.provably_empty;
  vs.complete = true;

  std::vector<Hyperplane> equalities;
  std::vector<Hyperplane> candidates;
  for (const auto& c : sub.model.constraints()) {
    Hyperplane h{Eigen::VectorXd::Zero(n), c.rhs};
    for (const auto& [idx, coeff] : c.coeffs) h.normal(static_cast<Eigen::Index>(idx)) = coeff;
    (c.sense == ConstraintSense::equal ? equalities : candidates).push_back(std::move(h));
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& v = sub.model.variables()[static_cast<std::size_t>(j)];
    for (double bound : {v.lower, v.upper}) {
      if (!std::isfinite(bound)) continue;
      Hyperplane h{Eigen::VectorXd::Zero(n), bound};
      h.normal(j) = 1.0;
      candidates.push_back(std::move(h));
    }
  }

  // Every vertex lies on all equalities: parametrize that affine subspace as
  // x0 + N t and intersect candidate hyperplanes inside it.
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
  Eigen::MatrixXd kernel = Eigen::MatrixXd::Identity(n, n);
  if (!equalities.empty()) {
    Eigen::MatrixXd E(static_cast<Eigen::Index>(equalities.size()), n);
    Eigen::VectorXd e(static_cast<Eigen::Index>(equalities.size()));
    for (std::size_t i = 0; i < equalities.size(); ++i) {
      E.row(static_cast<Eigen::Index>(i)) = equalities[i].normal.transpose();
      e(static_cast<Eigen::Index>(i)) = equalities[i].offset;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(E);
    x0 = lu.solve(e);
    if ((E * x0 - e).norm() > 1e-7 * (1.0 + e.norm())) return vs;
    if (lu.rank() == n) {
      kernel.resize(n, 0);
    } else {
      kernel = lu.kernel();
    }
  }
  const auto k = static_cast<std::size_t>(kernel.cols());

  std::vector<Point> points;
  auto consider = [&](const Eigen::VectorXd& x) {
    if (!feasible(sub.model, x)) return;
    points.emplace_back(x.data(), x.data() + x.size());
  };

  if (k == 0) {
    consider(x0);
  } else {
    if (binomial(candidates.size(), k) > kMaxBruteForceCombinations) {
      throw CombinatorialGuardError("brute_force_vertices: C(" + std::to_string(candidates.size()) +
                                    ", " + std::to_string(k) + ") exceeds 1e7 subsets");
    }
    if (candidates.size() >= k) {
      // Reduced hyperplanes a·N t = b - a·x0.
      Eigen::MatrixXd reduced(static_cast<Eigen::Index>(candidates.size()), static_cast<Eigen::Index>(k));
      Eigen::VectorXd rhs(static_cast<Eigen::Index>(candidates.size()));
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        reduced.row(static_cast<Eigen::Index>(i)) = candidates[i].normal.transpose() * kernel;
        rhs(static_cast<Eigen::Index>(i)) = candidates[i].offset - candidates[i].normal.dot(x0);
      }
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      Eigen::MatrixXd M(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
      Eigen::VectorXd b(static_cast<Eigen::Index>(k));
      for (;;) {
        for (std::size_t i = 0; i < k; ++i) {
          M.row(static_cast<Eigen::Index>(i)) = reduced.row(static_cast<Eigen::Index>(pick[i]));
          b(static_cast<Eigen::Index>(i)) = rhs(static_cast<Eigen::Index>(pick[i]));
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
        if (lu.isInvertible()) consider(x0 + kernel * lu.solve(b));

        std::size_t i = k;
        while (i > 0 && pick[i - 1] == candidates.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t t = i; t < k; ++t) pick[t] = pick[t - 1] + 1;
      }
    }
  }

  for (auto& p : points) clean_point(p);
  std::vector<double> none;
  sort_and_dedup(points, none, dedup_tol);
  vs.points = std::move(points);
  for (const auto& p : vs.points) vs.objective_values.push_back(model.evaluate_objective(p));
  return vs;
}

}  // namespace aos
