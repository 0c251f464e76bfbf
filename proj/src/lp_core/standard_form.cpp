#include "aos/standard_form.hpp"

#include <algorithm>
#include <cmath>

#include "aos/errors.hpp"

namespace aos {
namespace {

constexpr double kRankTol = 1e-9;

// Incremental row echelon basis over augmented rows [a | b]. Each stored row
// is zero at the pivot columns of all rows stored before it.
class RowBasis {
 public:
  explicit RowBasis(std::size_t cols) : cols_(cols) {}

  enum class Verdict { independent, redundant, inconsistent };

  Verdict insert(std::vector<double> row) {
    double scale = 0.0;
    for (std::size_t c = 0; c <= cols_; ++c) scale = std::max(scale, std::abs(row[c]));
    scale = std::max(scale, 1.0);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const double f = row[pivots_[k]] / rows_[k][pivots_[k]];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) row[c] -= f * rows_[k][c];
    }
    std::size_t pivot = cols_;
    double best = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (std::abs(row[c]) > best) {
        best = std::abs(row[c]);
        pivot = c;
      }
    }
    if (best <= kRankTol * scale) {
      return std::abs(row[cols_]) <= 1e-7 * scale ? Verdict::redundant : Verdict::inconsistent;
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return Verdict::independent;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

StandardForm to_standard_form(const LpModel& model) {
  const std::size_t n = model.num_variables();
  if (n == 0) throw ModelError("cannot convert an empty model");
  for (const auto& v : model.variables()) {
    if (v.lower > v.upper) throw ModelError("variable '" + v.name + "' has lower > upper");
  }

  StandardForm sf;
  sf.num_model_vars = n;
  const auto& obj = model.objective();
  sf.objective_sign = obj.sense == ObjectiveSense::maximize ? -1.0 : 1.0;
  sf.objective_constant = obj.constant;

  std::size_t num_slacks = 0;
  for (const auto& c : model.constraints()) {
    if (c.sense != ConstraintSense::equal) ++num_slacks;
  }
  const std::size_t cols = n + num_slacks;

  sf.cost.assign(cols, 0.0);
  for (const auto& [idx, coeff] : obj.coeffs) sf.cost[idx] = sf.objective_sign * coeff;
  sf.lower.assign(cols, 0.0);
  sf.upper.assign(cols, kInf);
  for (std::size_t j = 0; j < n; ++j) {
    sf.lower[j] = model.variables()[j].lower;
    sf.upper[j] = model.variables()[j].upper;
  }

  RowBasis basis(cols);
  sf.A = DenseMatrix(0, cols);
  std::size_t next_slack = n;
  for (std::size_t r = 0; r < model.constraints().size(); ++r) {
    const auto& c = model.constraints()[r];
    std::vector<double> row(cols + 1, 0.0);
    for (const auto& [idx, coeff] : c.coeffs) row[idx] = coeff;
    row[cols] = c.rhs;
    if (c.sense == ConstraintSense::equal) {
      sf.slack_column.push_back(StandardForm::npos);
    } else {
      const double sign = c.sense == ConstraintSense::less_equal ? 1.0 : -1.0;
      row[next_slack] = sign;
      sf.slack_column.push_back(next_slack);
      sf.slack_sign.push_back(sign);
      ++next_slack;
    }
    switch (basis.insert(row)) {
      case RowBasis::Verdict::independent:
        sf.A.append_row(std::span<const double>(row.data(), cols));
        sf.rhs.push_back(c.rhs);
        sf.kept_rows.push_back(r);
        break;
      case RowBasis::Verdict::redundant:
        break;
      case RowBasis::Verdict::inconsistent:
        sf.inconsistent = true;
        break;
    }
  }
  // Only equality rows can be dropped: every inequality owns its slack column.
  return sf;
}

std::vector<double> StandardForm::to_model_point(std::span<const double> x) const {
  return {x.begin(), x.begin() + static_cast<std::ptrdiff_t>(num_model_vars)};
}

std::vector<double> StandardForm::from_model_point(const LpModel& model,
                                                   std::span<const double> x) const {
  std::vector<double> out(num_columns(), 0.0);
  std::copy(x.begin(), x.end(), out.begin());
  std::size_t k = 0;
  for (std::size_t r = 0; r < model.constraints().size(); ++r) {
    const std::size_t col = slack_column[r];
    if (col == npos) continue;
    const auto& c = model.constraints()[r];
    out[col] = slack_sign[k] * (c.rhs - evaluate(c.coeffs, x));
    ++k;
  }
  return out;
}

double StandardForm::standard_objective(std::span<const double> x) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < cost.size(); ++j) sum += cost[j] * x[j];
  return sum;
}

}  // namespace aos
