#include "aos/projection.hpp"

#include <unordered_map>

#include "aos/errors.hpp"

namespace aos {

ProjectionSpec ProjectionSpec::by_role(const LpModel& model, VariableRole role) {
  std::vector<std::string> names;
  for (const auto& v : model.variables()) {
    if (v.role == role) names.push_back(v.name);
  }
  return named(std::move(names));
}

std::vector<std::size_t> ProjectionSpec::resolve(std::size_t dimension) const {
  if (!is_leading()) {
    throw DimensionError("a named projection needs the source variable names");
  }
  const std::size_t k = std::get<std::size_t>(spec_);
  if (k > dimension) {
    throw DimensionError("projection keeps " + std::to_string(k) + " of " +
                         std::to_string(dimension) + " coordinates");
  }
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

std::vector<std::size_t> ProjectionSpec::resolve(const std::vector<std::string>& source) const {
  if (is_leading()) return resolve(source.size());
  std::unordered_map<std::string, std::size_t> where;
  for (std::size_t i = 0; i < source.size(); ++i) where.emplace(source[i], i);
  std::vector<std::size_t> idx;
  for (const auto& name : std::get<std::vector<std::string>>(spec_)) {
    auto it = where.find(name);
    if (it == where.end()) throw DimensionError("projection references unknown variable '" + name + "'");
    idx.push_back(it->second);
  }
  return idx;
}

namespace {

Point gather(const Point& p, const std::vector<std::size_t>& idx) {
  Point out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(p[i]);
  return out;
}

}  // namespace

Point project_point(const Point& p, const ProjectionSpec& spec) {
  return gather(p, spec.resolve(p.size()));
}

Point project_point(const Point& p, const std::vector<std::string>& source,
                    const ProjectionSpec& spec) {
  if (p.size() != source.size()) {
    throw DimensionError("point dimension does not match the source variable list");
  }
  return gather(p, spec.resolve(source));
}

VertexSet project_set(const VertexSet& vs, const ProjectionSpec& spec, double dedup_tol) {
  const auto idx = vs.variables.empty() && spec.is_leading()
                       ? spec.resolve(vs.points.empty() ? 0 : vs.points.front().size())
                       : spec.resolve(vs.variables);
  VertexSet out;
  out.model_fingerprint = vs.model_fingerprint;
  out.tau = vs.tau;
  out.provably_empty = vs.provably_empty;
  out.complete = vs.complete;
  for (std::size_t i : idx) {
    if (i < vs.variables.size()) out.variables.push_back(vs.variables[i]);
  }
  for (const auto& p : vs.points) {
    if (p.size() != (vs.variables.empty() ? p.size() : vs.variables.size())) {
      throw DimensionError("points in a vertex set must share one dimension");
    }
    out.points.push_back(gather(p, idx));
  }
  std::vector<double> no_values;
  sort_and_dedup(out.points, no_values, dedup_tol);
  return out;
}

}  // namespace aos
