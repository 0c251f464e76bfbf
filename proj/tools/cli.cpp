#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "aos/analysis.hpp"
#include "aos/errors.hpp"
#include "aos/json_io.hpp"
#include "aos/network.hpp"
#include "aos/projection.hpp"
#include "aos/simplex.hpp"
#include "aos/sublevel.hpp"
#include "aos/vertex_enum.hpp"

namespace aos::cli {
namespace {

using nlohmann::json;

// Input or usage problem: exit 64, nothing written.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class LogLevel { off, warn, info, debug };

LogLevel log_level() {
  const char* env = std::getenv("AOS_LOG");
  if (env == nullptr) return LogLevel::warn;
  const std::string v = env;
  if (v == "off") return LogLevel::off;
  if (v == "info") return LogLevel::info;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::warn;
}

struct RunConfig {
  std::string command;
  std::string input;
  std::string model = "auto";
  std::optional<double> gap;
  std::optional<double> tau;
  std::string project;
  double box_bound = kDefaultBoxBound;
  std::size_t limit = kDefaultVertexLimit;
  double dedup_tol = kDefaultDedupTol;
  std::string output;
  std::uint64_t seed = 0;
  std::string secondary;
  bool inject_violation = false;
  int random = 0;
  std::size_t max_iterations = SimplexOptions{}.max_iterations;
};

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg), out_(out), err_(err), level_(log_level()) {}

  int dispatch() {
    if (cfg_.command == "solve") return cmd_solve();
    if (cfg_.command == "enumerate") return cmd_enumerate(false);
    if (cfg_.command == "oracle") return cmd_enumerate(true);
    if (cfg_.command == "verify") return cmd_verify();
    if (cfg_.command == "rank") return cmd_rank();
    throw UsageError("unknown command '" + cfg_.command + "'");
  }

 private:
  struct Input {
    json doc;
    std::string text;
    std::optional<Network> network;
    std::optional<LpModel> model;
    std::optional<VertexSet> vertex_set;
  };

  void log(LogLevel level, const std::string& msg) const {
    if (level <= level_ && level_ != LogLevel::off) err_ << "aos: " << msg << '\n';
  }

  Input load() const {
    if (cfg_.input.empty()) throw UsageError("missing input file");
    std::ifstream in(cfg_.input, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + cfg_.input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Input input;
    input.text = buf.str();
    try {
      input.doc = json::parse(input.text);
    } catch (const json::parse_error& e) {
      throw UsageError("'" + cfg_.input + "' is not valid JSON: " + e.what());
    }
    const std::string schema = input.doc.is_object() ? input.doc.value("schema", std::string()) : "";
    const std::string kind = input.doc.is_object() ? input.doc.value("kind", std::string()) : "";
    if (schema == kNetworkSchema) {
      input.network = parse_network(input.text);
    } else if (schema == kLpSchema) {
      input.model = lp_model_from_json(input.doc);
    } else if (kind == "vertex_set") {
      input.vertex_set = vertex_set_from_report(input.doc);
    } else {
      throw UsageError("'" + cfg_.input + "' is neither an aos-net/1 network, an aos-lp/1 model, nor a vertex_set report");
    }
    return input;
  }

  LpModel model_of(const Input& input) const {
    std::string kind = cfg_.model;
    if (input.model) {
      if (kind != "auto" && kind != "raw-lp") throw UsageError("--model " + kind + " needs a network input");
      return *input.model;
    }
    if (!input.network) throw UsageError("this command needs a network or LP model input");
    if (kind == "auto" || kind == "dcopf") return build_dcopf(*input.network);
    if (kind == "nf") return build_network_flow(*input.network);
    if (kind == "cp") return build_copper_plate(*input.network);
    throw UsageError("--model raw-lp needs an aos-lp/1 input");
  }

  SimplexOptions solver_options() const {
    SimplexOptions opts;
    opts.max_iterations = cfg_.max_iterations;
    return opts;
  }

  SublevelSpec level_spec() const {
    if (cfg_.tau) return SublevelSpec::absolute(*cfg_.tau);
    if (cfg_.gap) {
      if (*cfg_.gap < 0.0) throw UsageError("--gap must be >= 0");
      return SublevelSpec::relative_gap(*cfg_.gap);
    }
    return SublevelSpec::relative_gap(0.0);
  }

  ProjectionSpec projection_for(const LpModel& model) const {
    const std::string& p = cfg_.project;
    if (p == "generation") return ProjectionSpec::by_role(model, VariableRole::generation);
    if (p == "flow") return ProjectionSpec::by_role(model, VariableRole::flow);
    if (p == "angle") return ProjectionSpec::by_role(model, VariableRole::angle);
    if (!p.empty() && p.find_first_not_of("0123456789") == std::string::npos) {
      return ProjectionSpec::leading(std::stoul(p));
    }
    std::vector<std::string> names;
    std::stringstream ss(p);
    for (std::string name; std::getline(ss, name, ',');) {
      if (!name.empty()) names.push_back(name);
    }
    return ProjectionSpec::named(std::move(names));
  }

  void emit(const json& report) const {
    const std::string text = dump_report(report);
    if (cfg_.output.empty()) {
      out_ << text;
      return;
    }
    const std::filesystem::path target(cfg_.output);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw UsageError("cannot write '" + cfg_.output + "'");
      f << text;
    }
    std::filesystem::rename(tmp, target);
  }

  static int exit_for(SolveStatus status) {
    switch (status) {
      case SolveStatus::optimal: return kOk;
      case SolveStatus::infeasible: return kInfeasible;
      case SolveStatus::unbounded: return kUnbounded;
      case SolveStatus::numeric_failure: return kNumericFailure;
    }
    return kNumericFailure;
  }

  // Solves the base model; on anything but optimal, reports why and returns
  // the exit code.
  std::optional<int> require_optimal(const LpModel& model, SimplexResult& res) const {
    res = solve(model, solver_options());
    log(LogLevel::info, std::string("base model: ") + to_string(res.status) +
                            (res.optimal() ? ", z* = " + std::to_string(res.z_star) : ""));
    if (res.optimal()) return std::nullopt;
    err_ << "aos: base model is " << to_string(res.status) << '\n';
    return exit_for(res.status);
  }

  int cmd_solve() {
    const Input input = load();
    const LpModel model = model_of(input);
    const SimplexResult res = solve(model, solver_options());
    log(LogLevel::info, std::string("status ") + to_string(res.status));
    if (res.status == SolveStatus::numeric_failure) {
      err_ << "aos: solver lost numerical control\n";
      return kNumericFailure;
    }
    emit(solve_report(res, model));
    return exit_for(res.status);
  }

  VertexSet enumerate_input(const LpModel& model, double z_star, bool oracle) const {
    const SublevelSpec spec = level_spec();
    const BoxedModel boxed = apply_box_bounds(model, cfg_.box_bound);
    if (!boxed.boxed_variables.empty()) {
      log(LogLevel::info, "boxed " + std::to_string(boxed.boxed_variables.size()) + " variables at +/-" +
                              std::to_string(cfg_.box_bound));
    }
    VertexSet vs;
    if (oracle) {
      vs = brute_force_vertices(boxed.model, z_star, spec, cfg_.dedup_tol);
    } else {
      EnumerationOptions opts;
      opts.limit = cfg_.limit;
      opts.dedup_tol = cfg_.dedup_tol;
      vs = enumerate_vertices(boxed.model, z_star, spec, opts);
    }
    // Report the source model, not its boxed copy.
    vs.model_fingerprint = fingerprint(model);
    if (vs.provably_empty) log(LogLevel::warn, "level value is below z*: the sublevel set is provably empty");
    if (!cfg_.project.empty()) vs = project_set(vs, projection_for(model), cfg_.dedup_tol);
    return vs;
  }

  int cmd_enumerate(bool oracle) {
    const Input input = load();
    const LpModel model = model_of(input);
    SimplexResult base;
    if (auto code = require_optimal(model, base)) return *code;
    const VertexSet vs = enumerate_input(model, base.z_star, oracle);
    log(LogLevel::info, std::to_string(vs.size()) + " points, complete=" + (vs.complete ? "true" : "false"));
    json report = vertex_set_report(vs);
    report["z_star"] = report_number(base.z_star);
    emit(report);
    if (!vs.complete) {
      err_ << "aos: vertex limit " << cfg_.limit << " reached; the set is truncated\n";
      return kTruncated;
    }
    return kOk;
  }

  int cmd_verify() {
    ChainOptions options;
    options.box_bound = cfg_.box_bound;
    options.enumeration.limit = cfg_.limit;
    options.enumeration.dedup_tol = cfg_.dedup_tol;
    options.inject_violation = cfg_.inject_violation;
    const SublevelSpec spec = level_spec();

    if (cfg_.random > 0) return verify_random(spec, options);

    const Input input = load();
    if (!input.network) throw UsageError("verify needs an aos-net/1 network");
    const ChainResult chain = verify_relaxation_chain(*input.network, spec, options);
    if (chain.base_status != SolveStatus::optimal) {
      err_ << "aos: DC-OPF base model is " << to_string(chain.base_status) << '\n';
      return exit_for(chain.base_status);
    }
    emit(containment_report(chain));
    return chain.report.pass ? kOk : kVerifyFailed;
  }

  // Containment suite over random networks with 3 to 6 buses.
  int verify_random(const SublevelSpec& spec, const ChainOptions& options) {
    json report{{"schema_version", kReportSchema}, {"kind", "containment_suite"}, {"seed", cfg_.seed}};
    int checked = 0;
    int skipped = 0;
    bool pass = true;
    double worst = 0.0;
    json failures = json::array();
    for (int i = 0; i < cfg_.random; ++i) {
      const std::uint64_t seed = cfg_.seed * 1000003ULL + static_cast<std::uint64_t>(i);
      const Network net = random_network(seed, 3 + static_cast<int>(seed % 4));
      const ChainResult chain = verify_relaxation_chain(net, spec, options);
      if (chain.base_status != SolveStatus::optimal) {
        ++skipped;
        continue;
      }
      ++checked;
      for (const auto& pair : chain.report.pairs) worst = std::max(worst, pair.max_violation);
      if (!chain.report.pass) {
        pass = false;
        failures.push_back({{"network_seed", seed}, {"network", json::parse(network_to_json(net))}});
      }
    }
    report["networks_checked"] = checked;
    report["networks_skipped_infeasible"] = skipped;
    report["max_violation"] = report_number(worst);
    report["pass"] = pass;
    report["failures"] = failures;
    emit(report);
    return pass ? kOk : kVerifyFailed;
  }

  int cmd_rank() {
    if (cfg_.secondary.empty()) throw UsageError("rank needs --secondary FILE");
    std::ifstream sf(cfg_.secondary);
    if (!sf) throw UsageError("cannot open '" + cfg_.secondary + "'");
    json sdoc;
    try {
      sdoc = json::parse(sf);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("secondary objective is not valid JSON: ") + e.what());
    }
    const SecondarySpec secondary = secondary_from_json(sdoc);

    const Input input = load();
    VertexSet vs;
    if (input.vertex_set) {
      vs = *input.vertex_set;
    } else {
      const LpModel model = model_of(input);
      SimplexResult base;
      if (auto code = require_optimal(model, base)) return *code;
      vs = enumerate_input(model, base.z_star, false);
    }
    const RankedAlternatives ranked = secondary.external_scores
                                          ? rank_by_scores(vs, secondary.scores, secondary.linear.sense)
                                          : rank_alternatives(vs, secondary.linear);
    emit(ranking_report(ranked));
    return kOk;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  LogLevel level_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and analyze alternative optimal solutions of linear programs", "aos"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Network (aos-net/1), LP model (aos-lp/1) or vertex_set report");
    sub->add_option("--model", cfg.model, "dcopf | nf | cp | raw-lp (default: by input)")
        ->check(CLI::IsMember({"auto", "dcopf", "nf", "cp", "raw-lp"}));
    auto* gap = sub->add_option("--gap", cfg.gap, "Relative gap above z*");
    auto* tau = sub->add_option("--tau", cfg.tau, "Absolute level value");
    gap->excludes(tau);
    tau->excludes(gap);
    sub->add_option("--box-bound", cfg.box_bound, "Bound replacing infinite variable bounds")
        ->check(CLI::PositiveNumber);
    sub->add_option("--limit", cfg.limit, "Vertex limit")->check(CLI::PositiveNumber);
    sub->add_option("--dedup-tol", cfg.dedup_tol, "Coordinate tolerance for identical points")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--output", cfg.output, "Report path (default: stdout)");
    sub->add_option("--seed", cfg.seed, "Seed for randomized runs");
    sub->add_option("--max-iterations", cfg.max_iterations, "Simplex pivot budget for the base solve")
        ->check(CLI::PositiveNumber);
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve the model and report z* and x*");
  add_common(solve_cmd);
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate vertices of the sublevel set");
  add_common(enum_cmd);
  enum_cmd->add_option("--project", cfg.project, "generation | flow | angle | K | name,name,...");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force vertex enumeration for cross-checks");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--project", cfg.project, "generation | flow | angle | K | name,name,...");
  auto* verify_cmd = app.add_subcommand("verify", "Check projection containment across DC-OPF, NF and CP");
  add_common(verify_cmd);
  verify_cmd->add_option("--random", cfg.random, "Check N random networks instead of an input file")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--inject-violation", cfg.inject_violation)->group("");
  auto* rank_cmd = app.add_subcommand("rank", "Rank alternatives by a secondary objective");
  add_common(rank_cmd);
  rank_cmd->add_option("--project", cfg.project, "generation | flow | angle | K | name,name,...");
  rank_cmd->add_option("--secondary", cfg.secondary, "Secondary objective JSON file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "aos: " << e.what() << '\n';
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return Runner(cfg, out, err).dispatch();
  } catch (const UsageError& e) {
    err << "aos: " << e.what() << '\n';
    return kUsage;
  } catch (const NetworkError& e) {
    err << "aos: network: " << e.what() << '\n';
    return kUsage;
  } catch (const ModelError& e) {
    err << "aos: model: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "aos: " << e.what() << '\n';
    return kUsage;
  } catch (const UnboundedModelError& e) {
    err << "aos: " << e.what() << '\n';
    return kUsage;
  } catch (const CombinatorialGuardError& e) {
    err << "aos: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericError& e) {
    err << "aos: numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
}

}  // namespace aos::cli
