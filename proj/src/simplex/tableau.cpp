#include "tableau.hpp"

#include <algorithm>
#include <cmath>

namespace aos::detail {

CanonicalLp make_canonical(const StandardForm& sf) {
  const std::size_t n = sf.num_columns();
  CanonicalLp can;
  can.columns.resize(n);

  std::size_t next = n;
  for (std::size_t j = 0; j < n; ++j) {
    auto& map = can.columns[j];
    if (std::isfinite(sf.lower[j])) {
      map.offset = sf.lower[j];
    } else if (std::isfinite(sf.upper[j])) {
      map.offset = sf.upper[j];
      map.sign = -1.0;
    } else {
      map.neg = next++;
      can.has_split = true;
    }
  }
  std::vector<std::size_t> upper_rows;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isfinite(sf.lower[j]) && std::isfinite(sf.upper[j])) upper_rows.push_back(j);
  }
  const std::size_t cols = next + upper_rows.size();
  const std::size_t m = sf.A.rows() + upper_rows.size();

  can.A = DenseMatrix(m, cols);
  can.b.assign(m, 0.0);
  can.c.assign(cols, 0.0);

  for (std::size_t r = 0; r < sf.A.rows(); ++r) {
    double rhs = sf.rhs[r];
    for (std::size_t j = 0; j < n; ++j) {
      const double a = sf.A(r, j);
      if (a == 0.0) continue;
      const auto& map = can.columns[j];
      rhs -= a * map.offset;
      can.A(r, j) = a * map.sign;
      if (map.neg != npos) can.A(r, map.neg) = -a;
    }
    can.b[r] = rhs;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& map = can.columns[j];
    can.cost_offset += sf.cost[j] * map.offset;
    can.c[j] = sf.cost[j] * map.sign;
    if (map.neg != npos) can.c[map.neg] = -sf.cost[j];
  }
  for (std::size_t k = 0; k < upper_rows.size(); ++k) {
    const std::size_t j = upper_rows[k];
    const std::size_t r = sf.A.rows() + k;
    can.A(r, j) = 1.0;
    can.A(r, next + k) = 1.0;
    can.b[r] = sf.upper[j] - sf.lower[j];
  }
  return can;
}

std::vector<double> CanonicalLp::recover(std::span<const double> y) const {
  std::vector<double> x(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto& map = columns[j];
    x[j] = map.offset + map.sign * y[j];
    if (map.neg != npos) x[j] -= y[map.neg];
  }
  return x;
}

std::vector<double> CanonicalLp::recover_direction(std::span<const double> d) const {
  std::vector<double> x(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto& map = columns[j];
    x[j] = map.sign * d[j];
    if (map.neg != npos) x[j] -= d[map.neg];
  }
  return x;
}

std::optional<Tableau> Tableau::factor(const DenseMatrix& A, std::span<const double> b,
                                       const std::vector<std::size_t>& basis, double pivot_tol) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (basis.size() != m) return std::nullopt;
  DenseMatrix t(m, n + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) t(r, c) = A(r, c);
    t(r, n) = b[r];
  }
  std::vector<std::size_t> row_basis(m, npos);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t col = basis[k];
    // Rows [0, k) already hold earlier basic columns; pick the best of the rest.
    std::size_t best = m;
    double best_abs = pivot_tol;
    for (std::size_t r = k; r < m; ++r) {
      if (std::abs(t(r, col)) > best_abs) {
        best_abs = std::abs(t(r, col));
        best = r;
      }
    }
    if (best == m) return std::nullopt;
    t.swap_rows(k, best);
    const double inv = 1.0 / t(k, col);
    for (std::size_t c = 0; c <= n; ++c) t(k, c) *= inv;
    t(k, col) = 1.0;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == k) continue;
      const double f = t(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= n; ++c) t(r, c) -= f * t(k, c);
      t(r, col) = 0.0;
    }
    row_basis[k] = col;
  }
  return Tableau(std::move(t), n, std::move(row_basis));
}

void Tableau::pivot(std::size_t row, std::size_t col) {
  const std::size_t m = rows();
  const double inv = 1.0 / t_(row, col);
  for (std::size_t c = 0; c <= cols_; ++c) t_(row, c) *= inv;
  t_(row, col) = 1.0;
  for (std::size_t r = 0; r < m; ++r) {
    if (r == row) continue;
    const double f = t_(r, col);
    if (f == 0.0) continue;
    for (std::size_t c = 0; c <= cols_; ++c) t_(r, c) -= f * t_(row, c);
    t_(r, col) = 0.0;
  }
  basis_[row] = col;
}

std::vector<double> Tableau::primal() const {
  std::vector<double> y(cols_, 0.0);
  for (std::size_t r = 0; r < rows(); ++r) y[basis_[r]] = rhs(r);
  return y;
}

double Tableau::max_abs_rhs() const {
  double m = 0.0;
  for (std::size_t r = 0; r < rows(); ++r) m = std::max(m, std::abs(rhs(r)));
  return m;
}

RunOutcome run_simplex(Tableau& t, std::span<const double> cost, std::span<const char> allowed,
                       const SimplexOptions& options, RunStats& stats) {
  const std::size_t m = t.rows();
  const std::size_t n = t.cols();
  double cost_scale = 1.0;
  for (double c : cost) cost_scale = std::max(cost_scale, std::abs(c));
  const double opt_tol = options.optimality_tol * cost_scale;
  const std::size_t bland_after = std::max<std::size_t>(1, options.bland_factor * std::max<std::size_t>(m, 1));

  std::vector<char> is_basic(n, 0);
  std::vector<double> reduced(n);
  std::size_t degenerate_run = 0;
  bool bland = false;

  for (std::size_t local = 0;; ++local) {
    if (stats.iterations >= options.max_iterations) return {RunStatus::iteration_limit, npos};

    std::fill(is_basic.begin(), is_basic.end(), 0);
    for (std::size_t r = 0; r < m; ++r) is_basic[t.basis()[r]] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      double d = cost[j];
      for (std::size_t r = 0; r < m; ++r) d -= cost[t.basis()[r]] * t.at(r, j);
      reduced[j] = d;
    }

    std::size_t entering = npos;
    double most_negative = -opt_tol;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_basic[j] || !allowed[j]) continue;
      if (bland) {
        if (reduced[j] < -opt_tol) {
          entering = j;
          break;
        }
      } else if (reduced[j] < most_negative) {
        most_negative = reduced[j];
        entering = j;
      }
    }
    if (entering == npos) return {RunStatus::optimal, npos};

    const double rhs_scale = 1.0 + t.max_abs_rhs();
    std::size_t leaving = npos;
    double best_ratio = kInf;
    for (std::size_t r = 0; r < m; ++r) {
      const double a = t.at(r, entering);
      if (a <= options.pivot_tol) continue;
      const double ratio = std::max(0.0, t.rhs(r)) / a;
      const double tie = 1e-12 * rhs_scale;
      if (ratio < best_ratio - tie) {
        best_ratio = ratio;
        leaving = r;
      } else if (ratio <= best_ratio + tie) {
        const bool better = bland ? t.basis()[r] < t.basis()[leaving]
                                  : a > t.at(leaving, entering);
        if (better) {
          leaving = r;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
    }
    if (leaving == npos) return {RunStatus::unbounded, entering};

    if (best_ratio <= 1e-12 * rhs_scale) {
      if (++degenerate_run >= bland_after && !bland) {
        bland = true;
        stats.bland_engaged = true;
      }
    } else {
      degenerate_run = 0;
    }
    t.pivot(leaving, entering);
    ++stats.iterations;
  }
}

PhaseOneStatus phase_one(const DenseMatrix& A_in, std::span<const double> b_in,
                         const SimplexOptions& options, RunStats& stats, FeasibleStart& out) {
  const std::size_t m = A_in.rows();
  const std::size_t n = A_in.cols();
  DenseMatrix A = A_in;
  std::vector<double> b(b_in.begin(), b_in.end());
  for (std::size_t r = 0; r < m; ++r) {
    if (b[r] < 0.0) {
      for (std::size_t c = 0; c < n; ++c) A(r, c) = -A(r, c);
      b[r] = -b[r];
    }
  }
  double b_scale = 1.0;
  for (double v : b) b_scale = std::max(b_scale, std::abs(v));

  DenseMatrix ext(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) ext(r, c) = A(r, c);
    ext(r, n + r) = 1.0;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;
  auto tab = Tableau::factor(ext, b, basis, options.pivot_tol);
  if (!tab) return PhaseOneStatus::numeric_failure;

  std::vector<double> cost(n + m, 0.0);
  std::fill(cost.begin() + static_cast<std::ptrdiff_t>(n), cost.end(), 1.0);
  std::vector<char> allowed(n + m, 1);
  const auto outcome = run_simplex(*tab, cost, allowed, options, stats);
  if (outcome.status == RunStatus::iteration_limit) return PhaseOneStatus::numeric_failure;

  double infeasibility = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    if (tab->basis()[r] >= n) infeasibility += std::abs(tab->rhs(r));
  }
  if (infeasibility > options.feasibility_tol * b_scale) return PhaseOneStatus::infeasible;

  // Drive remaining (zero-level) artificials out of the basis; rows where no
  // structural column can replace them are redundant.
  std::vector<std::size_t> redundant;
  for (std::size_t r = 0; r < m; ++r) {
    if (tab->basis()[r] < n) continue;
    std::size_t col = npos;
    double best = options.pivot_tol;
    std::vector<char> basic(n, 0);
    for (std::size_t k = 0; k < m; ++k) {
      if (tab->basis()[k] < n) basic[tab->basis()[k]] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (basic[j]) continue;
      if (std::abs(tab->at(r, j)) > best) {
        best = std::abs(tab->at(r, j));
        col = j;
      }
    }
    if (col == npos) {
      redundant.push_back(r);
    } else {
      tab->pivot(r, col);
    }
  }

  std::vector<char> drop(m, 0);
  for (std::size_t r : redundant) drop[tab->basis()[r] - n] = 1;
  out.A = DenseMatrix(0, n);
  out.b.clear();
  out.basis.clear();
  for (std::size_t r = 0; r < m; ++r) {
    if (drop[r]) continue;
    out.A.append_row(A.row(r));
    out.b.push_back(b[r]);
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (tab->basis()[r] < n) out.basis.push_back(tab->basis()[r]);
  }
  if (out.A.rows() == 0) out.A = DenseMatrix(0, n);
  return PhaseOneStatus::feasible;
}

}  // namespace aos::detail
