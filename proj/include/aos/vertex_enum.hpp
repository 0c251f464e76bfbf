#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "aos/lp_model.hpp"
#include "aos/sublevel.hpp"
#include "aos/vertex_set.hpp"

namespace aos {

inline constexpr std::size_t kDefaultVertexLimit = 10000;

struct EnumerationOptions {
  std::size_t limit = kDefaultVertexLimit;
  double dedup_tol = kDefaultDedupTol;
  /// When set, candidate pivots are visited in a seeded random order. The
  /// complete result does not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Vertices of S(f, X, tau) by breadth-first search over feasible bases.
///
/// Starts from a feasible basis of the sublevel polytope and follows every
/// single pivot that keeps the basis feasible, degenerate ones included.
/// Bases are mapped to coordinates and merged geometrically. Stops early
/// with complete=false once more than `limit` distinct points are found.
///
/// Throws UnboundedModelError if any variable bound is infinite; call
/// apply_box_bounds first.
[[nodiscard]] VertexSet enumerate_vertices(const LpModel& model, double z_star,
                                           const SublevelSpec& spec,
                                           const EnumerationOptions& options = {});

inline constexpr double kMaxBruteForceCombinations = 1e7;

/// Independent oracle: intersects every n-subset of bounding hyperplanes
/// (equalities are always active) and keeps the feasible solutions.
/// Always complete. Throws CombinatorialGuardError above 1e7 subsets.
[[nodiscard]] VertexSet brute_force_vertices(const LpModel& model, double z_star,
                                             const SublevelSpec& spec,
                                             double dedup_tol = kDefaultDedupTol);

struct UniquenessCertificate {
  bool unique = false;
  double tau = 0.0;
  bool complete = false;
  /// The single vertex when unique, otherwise the first two found.
  std::vector<Point> witnesses;
};

/// Enumerates with an early exit at the second distinct vertex. unique is
/// true only when the enumeration was exhaustive and found one point.
[[nodiscard]] UniquenessCertificate is_unique_minimizer(const LpModel& model, double z_star,
                                                        const SublevelSpec& spec,
                                                        double dedup_tol = kDefaultDedupTol);

}  // namespace aos
