#pragma once

// Internal machinery shared by the LP solver and the vertex enumerator.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aos/dense_matrix.hpp"
#include "aos/simplex.hpp"
#include "aos/standard_form.hpp"

namespace aos::detail {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// min c·y + cost_offset  s.t.  A y = b,  y >= 0.
///
/// Column j < sf.num_columns() is the shifted/reflected copy of standard-form
/// column j. Free columns get a second (negative part) column after those,
/// and finite upper bounds become rows with their own slack columns at the end.
struct CanonicalLp {
  struct ColumnMap {
    double offset = 0.0;
    double sign = 1.0;
    std::size_t neg = npos;
  };

  DenseMatrix A;
  std::vector<double> b;
  std::vector<double> c;
  double cost_offset = 0.0;
  std::vector<ColumnMap> columns;
  bool has_split = false;

  [[nodiscard]] std::size_t num_columns() const { return c.size(); }
  [[nodiscard]] std::vector<double> recover(std::span<const double> y) const;
  [[nodiscard]] std::vector<double> recover_direction(std::span<const double> d) const;
};

[[nodiscard]] CanonicalLp make_canonical(const StandardForm& sf);

/// B^{-1} [A | b] for a basis, one row per basic column.
class Tableau {
 public:
  /// Gauss-Jordan with partial pivoting from the original matrix. Returns
  /// nullopt when the basis matrix is singular at pivot_tol.
  static std::optional<Tableau> factor(const DenseMatrix& A, std::span<const double> b,
                                       const std::vector<std::size_t>& basis, double pivot_tol);

  [[nodiscard]] std::size_t rows() const { return basis_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] double at(std::size_t r, std::size_t c) const { return t_(r, c); }
  [[nodiscard]] double rhs(std::size_t r) const { return t_(r, cols_); }
  [[nodiscard]] const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t row, std::size_t col);
  [[nodiscard]] std::vector<double> primal() const;
  [[nodiscard]] double max_abs_rhs() const;

 private:
  Tableau(DenseMatrix t, std::size_t cols, std::vector<std::size_t> basis)
      : t_(std::move(t)), cols_(cols), basis_(std::move(basis)) {}
  DenseMatrix t_;
  std::size_t cols_;
  std::vector<std::size_t> basis_;
};

enum class RunStatus { optimal, unbounded, iteration_limit };

struct RunOutcome {
  RunStatus status = RunStatus::optimal;
  std::size_t entering = npos;  // unbounded column
};

struct RunStats {
  std::size_t iterations = 0;
  bool bland_engaged = false;
};

/// Primal simplex on a feasible tableau. `allowed[j] == 0` keeps column j out.
RunOutcome run_simplex(Tableau& t, std::span<const double> cost, std::span<const char> allowed,
                       const SimplexOptions& options, RunStats& stats);

struct FeasibleStart {
  DenseMatrix A;  // rows sign-normalized, redundant rows removed
  std::vector<double> b;
  std::vector<std::size_t> basis;
};

enum class PhaseOneStatus { feasible, infeasible, numeric_failure };

/// Finds a feasible basis of {A y = b, y >= 0}.
PhaseOneStatus phase_one(const DenseMatrix& A, std::span<const double> b,
                         const SimplexOptions& options, RunStats& stats, FeasibleStart& out);

}  // namespace aos::detail
