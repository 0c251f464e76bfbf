#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aos/lp_model.hpp"

namespace aos {

inline constexpr double kDefaultDedupTol = 1e-6;

using Point = std::vector<double>;

/// A finite point set in a named variable space, typically the vertices of
/// a sublevel polytope. Points are kept distinct under the dedup tolerance
/// and sorted lexicographically.
struct VertexSet {
  std::string model_fingerprint;
  std::vector<std::string> variables;
  double tau = 0.0;
  bool provably_empty = false;
  std::vector<Point> points;
  /// Objective of the source model at each point; empty after projection.
  std::vector<double> objective_values;
  /// True iff enumeration ran to exhaustion.
  bool complete = true;

  [[nodiscard]] std::size_t size() const { return points.size(); }
  [[nodiscard]] bool empty() const { return points.empty(); }
};

/// Max-norm closeness: identical iff every coordinate differs by <= tol.
[[nodiscard]] bool points_match(const Point& a, const Point& b, double tol);

/// Zeroes coordinates below 1e-11 of the point's largest magnitude
/// (elimination noise), which also removes -0.0.
void clean_point(Point& p);

/// Sorts points lexicographically and drops every point that matches an
/// earlier kept one. `values`, when non-empty, is permuted alongside.
void sort_and_dedup(std::vector<Point>& points, std::vector<double>& values, double tol);

/// FNV-1a hash of the model's canonical JSON, as 16 hex digits.
[[nodiscard]] std::string fingerprint(const LpModel& model);

}  // namespace aos
