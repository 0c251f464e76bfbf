#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "aos/lp_model.hpp"
#include "aos/vertex_set.hpp"

namespace aos {

/// Which coordinates a projection keeps: the first k, or named variables in
/// the listed order.
class ProjectionSpec {
 public:
  static ProjectionSpec leading(std::size_t k) { return ProjectionSpec(k); }
  static ProjectionSpec named(std::vector<std::string> names) {
    return ProjectionSpec(std::move(names));
  }
  /// All variables of `model` carrying `role`, in declaration order.
  static ProjectionSpec by_role(const LpModel& model, VariableRole role);
  /// The variables of `target`, by name. Used to align a projection with a
  /// relaxed model's variable space.
  static ProjectionSpec onto(const LpModel& target) { return named(target.variable_names()); }

  /// Resolves to source indices. Throws DimensionError on an unknown name
  /// or k > dimension.
  [[nodiscard]] std::vector<std::size_t> resolve(const std::vector<std::string>& source) const;
  [[nodiscard]] std::vector<std::size_t> resolve(std::size_t dimension) const;

  [[nodiscard]] bool is_leading() const { return std::holds_alternative<std::size_t>(spec_); }

 private:
  explicit ProjectionSpec(std::size_t k) : spec_(k) {}
  explicit ProjectionSpec(std::vector<std::string> names) : spec_(std::move(names)) {}
  std::variant<std::size_t, std::vector<std::string>> spec_;
};

/// Keeps the retained coordinates in retained order. Named specs need the
/// source variable names.
[[nodiscard]] Point project_point(const Point& p, const ProjectionSpec& spec);
[[nodiscard]] Point project_point(const Point& p, const std::vector<std::string>& source,
                                  const ProjectionSpec& spec);

/// Point-wise projection, then dedup and lexicographic sort.
[[nodiscard]] VertexSet project_set(const VertexSet& vs, const ProjectionSpec& spec,
                                    double dedup_tol = kDefaultDedupTol);

}  // namespace aos
