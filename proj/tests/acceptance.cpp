// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "aos/analysis.hpp"
#include "aos/binary.hpp"
#include "aos/network.hpp"
#include "aos/projection.hpp"
#include "aos/simplex.hpp"
#include "aos/sublevel.hpp"
#include "aos/vertex_enum.hpp"
#include "test_support.hpp"

namespace {

using namespace aos;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure notes for one criterion.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) notes_.push_back(what);
  }
  [[nodiscard]] bool ok() const { return notes_.empty(); }
  [[nodiscard]] std::string summary() const {
    std::string s;
    for (std::size_t i = 0; i < notes_.size() && i < 5; ++i) s += (i ? "; " : "") + notes_[i];
    if (notes_.size() > 5) s += "; ... " + std::to_string(notes_.size() - 5) + " more";
    return s;
  }

 private:
  std::vector<std::string> notes_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string fmt(const Point& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + fmt(p[i]);
  return s + "]";
}

VertexSet sublevel_vertices(const LpModel& raw, double box, const SublevelSpec& spec) {
  const LpModel lp = apply_box_bounds(raw, box).model;
  const SimplexResult res = solve(lp);
  if (!res.optimal()) return {};
  return enumerate_vertices(lp, res.z_star, spec);
}

// 1. Canonical optimum.
std::string criterion_1(Check& c) {
  const auto start = Clock::now();
  const SimplexResult res = solve(build_dcopf(canonical_three_bus()));
  const double elapsed = seconds_since(start);
  c.require(res.optimal(), "status " + std::string(to_string(res.status)));
  if (res.optimal()) {
    c.require(std::abs(res.z_star - 5000.0) <= 1e-6, "z* = " + fmt(res.z_star));
    const Point gen(res.x_star.begin(), res.x_star.begin() + 3);
    c.require(points_match(gen, {100, 0, 0}, 1e-6), "P* = " + fmt(gen));
  }
  c.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " s");
  return "z* = " + fmt(res.z_star) + ", " + fmt(elapsed * 1e3) + " ms";
}

// 2. Vertex counts at gap 0, two box bounds, checked against the oracle.
std::string criterion_2(Check& c) {
  const Network net = canonical_three_bus();
  const std::array<std::pair<ModelKind, std::size_t>, 3> expected{
      {{ModelKind::dcopf, 5}, {ModelKind::network_flow, 4}, {ModelKind::copper_plate, 2}}};
  std::string counts;
  for (double box : {1e4, 1e6}) {
    for (const auto& [kind, want] : expected) {
      const LpModel lp = apply_box_bounds(build_model(net, kind), box).model;
      const VertexSet vs = sublevel_vertices(lp, box, SublevelSpec::relative_gap(0));
      const VertexSet oracle = brute_force_vertices(lp, 5000.0, SublevelSpec::relative_gap(0));
      const std::string tag = std::string(to_string(kind)) + "@M=" + fmt(box);
      c.require(vs.complete && vs.size() == want, tag + " count " + std::to_string(vs.size()));
      c.require(test::same_points(vs.points, oracle.points), tag + " differs from oracle");
      if (box == 1e4) counts += (counts.empty() ? "" : "/") + std::to_string(vs.size());
    }
  }
  return "counts " + counts + " at M=1e4 and M=1e6, oracle agrees";
}

// 3. Projected generation sets and hull membership.
std::string criterion_3(Check& c) {
  const Network net = canonical_three_bus();
  const std::vector<Point> dc_want{{0, 100, 0}, {50, 50, 0}, {100, 0, 0}};
  const std::vector<Point> relaxed_want{{0, 100, 0}, {100, 0, 0}};
  for (const auto& [kind, want] : std::vector<std::pair<ModelKind, std::vector<Point>>>{
           {ModelKind::dcopf, dc_want}, {ModelKind::network_flow, relaxed_want}, {ModelKind::copper_plate, relaxed_want}}) {
    const LpModel lp = build_model(net, kind);
    const VertexSet vs = sublevel_vertices(lp, kDefaultBoxBound, SublevelSpec::relative_gap(0));
    const VertexSet gen = project_set(vs, ProjectionSpec::by_role(lp, VariableRole::generation));
    c.require(test::same_points(gen.points, want, 1e-6), std::string(to_string(kind)) + " projects to " +
                                                              std::to_string(gen.size()) + " points");
  }
  c.require(is_in_convex_hull({50, 50, 0}, {{100, 0, 0}, {0, 100, 0}}), "[50,50,0] not in hull");
  return "DC 3 points, NF/CP 2 points, [50,50,0] in hull";
}

// 4. Triangle fixtures.
std::string criterion_4(Check& c) {
  const LpModel exact = apply_box_bounds(test::triangle_exact()).model;
  const LpModel perturbed = apply_box_bounds(test::triangle_perturbed()).model;
  const double z1 = solve(exact).z_star;
  const double z2 = solve(perturbed).z_star;
  const VertexSet s1 = enumerate_vertices(exact, z1, SublevelSpec::relative_gap(0));
  c.require(test::same_points(s1.points, {{100, 1}, {100, 100}}), "problem 1 has " + std::to_string(s1.size()) + " vertices");
  const VertexSet s2 = enumerate_vertices(perturbed, z2, SublevelSpec::relative_gap(0));
  c.require(test::same_points(s2.points, {{100, 1}}), "problem 2 has " + std::to_string(s2.size()) + " vertices");
  const UniquenessCertificate cert = is_unique_minimizer(perturbed, z2, SublevelSpec::relative_gap(0));
  c.require(cert.unique, "problem 2 not certified unique");
  const VertexSet near = enumerate_vertices(perturbed, z2, SublevelSpec::relative_gap(0.01));
  const bool has_corner = std::any_of(near.points.begin(), near.points.end(),
                                      [](const Point& p) { return points_match(p, {99, 100}, 1e-6); });
  c.require(has_corner, "(99,100) missing at 1% gap");
  const RankedAlternatives ranked = rank_alternatives(near, {ObjectiveSense::maximize, {{"x2", 1.0}}, 0.0});
  double best = NAN;
  double worst = NAN;
  if (!ranked.entries.empty()) {
    best = ranked.best().value;
    worst = ranked.worst().value;
  }
  c.require(std::abs(best - 100.0) <= 1e-6, "best secondary " + fmt(best));
  c.require(std::abs(worst - 1.0) <= 1e-6, "worst secondary " + fmt(worst));
  return "S1 2 vertices, S2 unique, 1% gap best/worst " + fmt(best) + "/" + fmt(worst);
}

// 5. Containment on random networks at three levels.
std::string criterion_5(Check& c) {
  const auto start = Clock::now();
  int networks = 0;
  int runs = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 1; networks < 200 && seed < 5000; ++seed) {
    const Network net = random_network(seed, 3 + static_cast<int>(seed % 4));
    const SimplexResult base = solve(build_dcopf(net));
    if (!base.optimal()) continue;
    ++networks;
    for (double factor : {1.0, 1.01, 1.1}) {
      const ChainResult chain = verify_relaxation_chain(net, SublevelSpec::absolute(factor * base.z_star));
      ++runs;
      c.require(chain.base_status == SolveStatus::optimal, "seed " + std::to_string(seed) + " base not optimal");
      for (const auto& pair : chain.report.pairs) {
        worst = std::max(worst, pair.max_violation);
        c.require(pair.pass && pair.max_violation <= 1e-6,
                  "seed " + std::to_string(seed) + " x" + fmt(factor) + " " + pair.name + " violation " +
                      fmt(pair.max_violation));
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.require(networks >= 200, "only " + std::to_string(networks) + " feasible networks");
  c.require(elapsed < 300.0, "runtime " + fmt(elapsed) + " s");
  return std::to_string(networks) + " networks, " + std::to_string(runs) + " levels, max violation " + fmt(worst) +
         ", " + fmt(elapsed) + " s";
}

// 6. Pivoting vs hyperplane scan, and no-good pools vs exhaustive scan.
std::string criterion_6(Check& c) {
  std::mt19937_64 rng(20240601);
  const double gaps[] = {0.0, 0.0, 0.05, 0.25, 1.0};
  int lps = 0;
  for (int trial = 0; lps < 500 && trial < 5000; ++trial) {
    // Every other instance has a heavily degenerate vertex.
    const LpModel lp = test::random_bounded_lp(rng, 5, 10, true, trial % 2 == 1);
    const SimplexResult res = solve(lp);
    if (!res.optimal()) continue;
    ++lps;
    const SublevelSpec spec = SublevelSpec::relative_gap(gaps[trial % 5]);
    const VertexSet vs = enumerate_vertices(lp, res.z_star, spec);
    const VertexSet oracle = brute_force_vertices(lp, res.z_star, spec);
    c.require(vs.complete && test::same_points(vs.points, oracle.points),
              "LP trial " + std::to_string(trial) + ": " + std::to_string(vs.size()) + " vs oracle " +
                  std::to_string(oracle.size()));
  }
  c.require(lps >= 500, "only " + std::to_string(lps) + " feasible LPs");

  int programs = 0;
  for (int trial = 0; programs < 100 && trial < 1000; ++trial) {
    const test::RandomBinary rb = test::random_binary(rng, 10);
    const test::BinaryScan scan = test::exhaustive_binary_scan(rb.model, rb.n);
    if (!scan.best) continue;
    ++programs;
    const bool maximize = rb.model.objective().sense == ObjectiveSense::maximize;
    for (double eps : {0.0, 0.05}) {
      const BinarySolutionPool pool =
          enumerate_binary(rb.model, rb.model.variable_names(), SublevelSpec::relative_gap(eps), 5000);
      const double tol = 1e-9 * std::max(1.0, std::abs(pool.tau));
      std::set<std::vector<int>> expected;
      for (const auto& [a, v] : scan.feasible) {
        if (maximize ? v >= pool.tau - tol : v <= pool.tau + tol) expected.insert(a);
      }
      std::set<std::vector<int>> got;
      for (const auto& s : pool.solutions) got.insert(s.assignment);
      c.require(pool.exhausted && got.size() == pool.solutions.size() && got == expected,
                "binary trial " + std::to_string(trial) + " eps " + fmt(eps) + ": pool " +
                    std::to_string(pool.solutions.size()) + " vs scan " + std::to_string(expected.size()));
    }
  }
  c.require(programs >= 100, "only " + std::to_string(programs) + " feasible binary programs");
  return std::to_string(lps) + " LPs, " + std::to_string(programs) + " binary programs x 2 gaps";
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = ::popen((cmd + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = ::pclose(pipe);
  return out;
}

// 7. Byte-identical CLI reports across repeated runs.
std::string criterion_7(Check& c) {
  namespace fs = std::filesystem;
  const std::string exe = AOS_CLI_PATH;
  const fs::path tmp = fs::temp_directory_path() / "aos_acceptance";
  fs::create_directories(tmp);
  const std::string secondary = (tmp / "max_x2.json").string();
  std::ofstream(secondary) << R"({"sense":"max","coeffs":{"x2":1}})";
  const std::string gen_secondary = (tmp / "min_p1.json").string();
  std::ofstream(gen_secondary) << R"({"sense":"min","coeffs":{"P_1":1}})";

  std::vector<std::string> commands;
  for (const auto& entry : fs::directory_iterator(AOS_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    const std::string f = " \"" + entry.path().string() + "\"";
    const bool network = test::read_file(entry.path().string()).find("aos-net/1") != std::string::npos;
    commands.push_back("solve" + f);
    commands.push_back("oracle" + f);
    if (network) {
      for (const char* m : {"dcopf", "nf", "cp"}) {
        commands.push_back(std::string("enumerate --model ") + m + f);
        commands.push_back(std::string("enumerate --gap 0.1 --project generation --model ") + m + f);
      }
      commands.push_back("verify" + f);
      commands.push_back("verify --gap 0.1" + f);
      commands.push_back("rank --project generation --secondary \"" + gen_secondary + "\"" + f);
    } else {
      commands.push_back("enumerate" + f);
      commands.push_back("enumerate --gap 0.01" + f);
      commands.push_back("rank --secondary \"" + secondary + "\"" + f);
    }
  }
  commands.push_back("verify --random 20 --seed 7");

  int runs = 0;
  for (const auto& cmd : commands) {
    int status = 0;
    const std::string first = run_command("\"" + exe + "\" " + cmd, status);
    c.require(!first.empty(), "no report from: " + cmd);
    for (int i = 0; i < 4; ++i) {
      int again = 0;
      c.require(run_command("\"" + exe + "\" " + cmd, again) == first && again == status, "report differs: " + cmd);
      ++runs;
    }
  }
  fs::remove_all(tmp);
  return std::to_string(commands.size()) + " commands x 5 runs identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string(Check&)>>> criteria{
      {"3-bus DC-OPF optimum", criterion_1},
      {"3-bus vertex counts 5/4/2", criterion_2},
      {"projected generation sets and hull", criterion_3},
      {"triangle fixtures", criterion_4},
      {"containment on random networks", criterion_5},
      {"enumeration oracle equivalence", criterion_6},
      {"CLI determinism", criterion_7},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    std::string detail;
    try {
      detail = criteria[i].second(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const bool ok = check.ok();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " (" << detail << ")";
    if (!ok) std::cout << " -- " << check.summary();
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
