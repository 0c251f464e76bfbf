#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "aos/analysis.hpp"
#include "aos/binary.hpp"
#include "aos/lp_model.hpp"
#include "aos/simplex.hpp"
#include "aos/vertex_enum.hpp"
#include "aos/vertex_set.hpp"

namespace aos {

inline constexpr const char* kLpSchema = "aos-lp/1";
inline constexpr const char* kNetworkSchema = "aos-net/1";
inline constexpr const char* kReportSchema = "aos-report/1";

/// Rounds to 12 significant digits so reports diff cleanly across runs.
[[nodiscard]] double report_number(double v);

/// "aos-lp/1". Infinite bounds are written as null.
[[nodiscard]] nlohmann::json lp_model_to_json(const LpModel& model);
/// Throws ModelError on schema violations.
[[nodiscard]] LpModel lp_model_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json solve_report(const SimplexResult& result, const LpModel& model);
[[nodiscard]] nlohmann::json vertex_set_report(const VertexSet& vs);
/// Throws ModelError when `j` is not a vertex_set report.
[[nodiscard]] VertexSet vertex_set_from_report(const nlohmann::json& j);
[[nodiscard]] nlohmann::json containment_report(const ChainResult& chain);
[[nodiscard]] nlohmann::json ranking_report(const RankedAlternatives& ranked);
[[nodiscard]] nlohmann::json uniqueness_report(const UniquenessCertificate& cert);
[[nodiscard]] nlohmann::json binary_pool_report(const BinarySolutionPool& pool);

/// Secondary objective file: {"sense": "max"|"min", "coeffs": {name: c}, "constant": c}
/// or {"sense": ..., "scores": [...]} for external per-point scores.
struct SecondarySpec {
  SecondaryObjective linear;
  std::vector<double> scores;
  bool external_scores = false;
};
[[nodiscard]] SecondarySpec secondary_from_json(const nlohmann::json& j);

/// Stable textual form: two-space indent, trailing newline.
[[nodiscard]] std::string dump_report(const nlohmann::json& j);

}  // namespace aos
