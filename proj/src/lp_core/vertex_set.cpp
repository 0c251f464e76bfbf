#include "aos/vertex_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "aos/json_io.hpp"

namespace aos {

bool points_match(const Point& a, const Point& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

void clean_point(Point& p) {
  double scale = 1.0;
  for (double v : p) scale = std::max(scale, std::abs(v));
  for (double& v : p) {
    if (std::abs(v) <= 1e-11 * scale) v = 0.0;
  }
}

void sort_and_dedup(std::vector<Point>& points, std::vector<double>& values, double tol) {
  const bool carry = !values.empty();
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  std::vector<Point> kept;
  std::vector<double> kept_values;
  for (std::size_t i : order) {
    const bool dup = std::any_of(kept.begin(), kept.end(),
                                 [&](const Point& k) { return points_match(k, points[i], tol); });
    if (dup) continue;
    kept.push_back(points[i]);
    if (carry) kept_values.push_back(values[i]);
  }
  points = std::move(kept);
  values = std::move(kept_values);
}

std::string fingerprint(const LpModel& model) {
  const std::string text = lp_model_to_json(model).dump();
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace aos
