#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "aos/analysis.hpp"
#include "aos/json_io.hpp"
#include "aos/network.hpp"
#include "aos/projection.hpp"
#include "cli.hpp"
#include "test_support.hpp"

namespace aos {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  [[nodiscard]] json report() const { return json::parse(out); }
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("aos_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::string kCanonical = test::data_path("canonical_3bus.json");
const std::string kExact = test::data_path("triangle_exact.json");
const std::string kPerturbed = test::data_path("triangle_perturbed.json");

TEST_F(CliTest, SolveCanonical) {
  const CliRun r = run_cli({"solve", "--model", "dcopf", kCanonical});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json rep = r.report();
  EXPECT_EQ(rep["schema_version"], "aos-report/1");
  EXPECT_EQ(rep["status"], "optimal");
  EXPECT_EQ(rep["z_star"].get<double>(), 5000.0);
  EXPECT_EQ(rep["x_star"][0].get<double>(), 100.0);
}

TEST_F(CliTest, SolveRawLpAndIdleCopperPlate) {
  const CliRun lp = run_cli({"solve", kPerturbed});
  ASSERT_EQ(lp.code, cli::kOk);
  EXPECT_EQ(lp.report()["z_star"].get<double>(), 100.0);
  EXPECT_EQ(run_cli({"solve", "--model", "raw-lp", kPerturbed}).code, cli::kOk);
  EXPECT_EQ(run_cli({"solve", "--model", "cp", kPerturbed}).code, cli::kUsage);

  const std::string idle = write("idle.json", R"({"schema":"aos-net/1","buses":[1]})");
  const CliRun cp = run_cli({"solve", "--model", "cp", idle});
  ASSERT_EQ(cp.code, cli::kOk) << cp.err;
  EXPECT_EQ(cp.report()["z_star"].get<double>(), 0.0);
}

TEST_F(CliTest, SolveStatusesMapToExitCodes) {
  const std::string unbounded = write("unb.json", R"({"schema":"aos-lp/1",
    "variables":[{"name":"x","lower":0}],"objective":{"sense":"max","coeffs":{"x":1}}})");
  const CliRun u = run_cli({"solve", unbounded});
  EXPECT_EQ(u.code, cli::kUnbounded);
  EXPECT_EQ(u.report()["status"], "unbounded");

  const std::string infeasible = write("inf.json", R"({"schema":"aos-lp/1",
    "variables":[{"name":"x","lower":0,"upper":1}],
    "constraints":[{"name":"c","coeffs":{"x":1},"sense":">=","rhs":2}]})");
  EXPECT_EQ(run_cli({"solve", infeasible}).code, cli::kInfeasible);
  EXPECT_EQ(run_cli({"enumerate", infeasible}).code, cli::kInfeasible);
}

TEST_F(CliTest, EnumerateCounts) {
  const CliRun dc = run_cli({"enumerate", "--model", "dcopf", "--gap", "0", kCanonical});
  ASSERT_EQ(dc.code, cli::kOk) << dc.err;
  EXPECT_EQ(dc.report()["count"], 5);
  EXPECT_EQ(dc.report()["complete"], true);
  EXPECT_EQ(run_cli({"enumerate", "--model", "nf", kCanonical}).report()["count"], 4);
  const CliRun cp = run_cli({"enumerate", "--model", "cp", "--gap", "0", "--project", "generation", kCanonical});
  EXPECT_EQ(cp.report()["count"], 2);
  EXPECT_EQ(cp.report()["variables"], json({"P_1", "P_2", "P_3"}));
  const CliRun lead = run_cli({"enumerate", "--project", "3", kCanonical});
  EXPECT_EQ(lead.report()["count"], 3);
  const CliRun named = run_cli({"enumerate", "--project", "P_2,P_1", kCanonical});
  EXPECT_EQ(named.report()["variables"], json({"P_2", "P_1"}));
  EXPECT_EQ(run_cli({"enumerate", "--project", "nope", kCanonical}).code, cli::kUsage);
}

TEST_F(CliTest, EnumerateBelowOptimumAndTruncation) {
  const CliRun below = run_cli({"enumerate", "--tau", "4999", kCanonical});
  ASSERT_EQ(below.code, cli::kOk);
  EXPECT_EQ(below.report()["count"], 0);
  EXPECT_EQ(below.report()["provably_empty"], true);

  const CliRun cut = run_cli({"enumerate", "--limit", "2", kCanonical});
  EXPECT_EQ(cut.code, cli::kTruncated);
  EXPECT_EQ(cut.report()["complete"], false);
  EXPECT_EQ(cut.report()["count"], 2);
}

TEST_F(CliTest, OracleMatchesEnumerate) {
  for (const auto& model : {"dcopf", "nf", "cp"}) {
    const json a = run_cli({"enumerate", "--model", model, kCanonical}).report();
    const json b = run_cli({"oracle", "--model", model, kCanonical}).report();
    EXPECT_EQ(a["count"], b["count"]) << model;
    EXPECT_EQ(a["points"], b["points"]) << model;
  }
}

TEST_F(CliTest, Verify) {
  EXPECT_EQ(run_cli({"verify", kCanonical}).code, cli::kOk);
  const CliRun gap = run_cli({"verify", "--gap", "0.1", kCanonical});
  EXPECT_EQ(gap.code, cli::kOk);
  EXPECT_EQ(gap.report()["pass"], true);

  const CliRun bad = run_cli({"verify", "--inject-violation", kCanonical});
  EXPECT_EQ(bad.code, cli::kVerifyFailed);
  EXPECT_EQ(bad.report()["pass"], false);

  json net = json::parse(test::read_file(kCanonical));
  net["loads"][0]["demand"] = 500.0;
  EXPECT_EQ(run_cli({"verify", write("short.json", net.dump())}).code, cli::kInfeasible);
  EXPECT_EQ(run_cli({"verify", kExact}).code, cli::kUsage);

  const CliRun suite = run_cli({"verify", "--random", "10", "--seed", "4"});
  EXPECT_EQ(suite.code, cli::kOk);
  EXPECT_EQ(suite.report()["pass"], true);
}

TEST_F(CliTest, RankExamples) {
  const std::string s1 = path("s1.json");
  ASSERT_EQ(run_cli({"enumerate", kExact, "--output", s1}).code, cli::kOk);
  const std::string max_x2 = write("max_x2.json", R"({"sense":"max","coeffs":{"x2":1}})");
  const CliRun r = run_cli({"rank", s1, "--secondary", max_x2});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.report()["best"]["value"].get<double>(), 100.0);
  EXPECT_EQ(r.report()["worst"]["value"].get<double>(), 1.0);

  const std::string min_p1 = write("min_p1.json", R"({"sense":"min","coeffs":{"P_1":1}})");
  const CliRun g = run_cli({"rank", kCanonical, "--project", "generation", "--secondary", min_p1});
  ASSERT_EQ(g.code, cli::kOk) << g.err;
  EXPECT_EQ(g.report()["best"]["point"], json({0.0, 100.0, 0.0}));

  const std::string empty = path("empty.json");
  ASSERT_EQ(run_cli({"enumerate", "--tau", "4999", kCanonical, "--output", empty}).code, cli::kOk);
  const CliRun e = run_cli({"rank", empty, "--secondary", min_p1});
  EXPECT_EQ(e.code, cli::kOk);
  EXPECT_TRUE(e.report()["entries"].empty());
  EXPECT_TRUE(e.report()["best"].is_null());

  const std::string ghost = write("ghost.json", R"({"sense":"max","coeffs":{"ghost":1}})");
  EXPECT_EQ(run_cli({"rank", s1, "--secondary", ghost}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"rank", s1}).code, cli::kUsage);

  const std::string scores = write("scores.json", R"({"sense":"min","scores":[5,2]})");
  const CliRun sc = run_cli({"rank", s1, "--secondary", scores});
  ASSERT_EQ(sc.code, cli::kOk) << sc.err;
  EXPECT_EQ(sc.report()["best"]["point"], json({100.0, 100.0}));
}

// Ranking a written enumeration report reproduces the in-process pipeline.
TEST_F(CliTest, EnumerateThenRankMatchesInProcess) {
  const std::string vs_path = path("dc.json");
  ASSERT_EQ(run_cli({"enumerate", kCanonical, "--project", "generation", "--output", vs_path}).code, cli::kOk);
  const std::string sec = write("sec.json", R"({"sense":"max","coeffs":{"P_1":2,"P_2":-1},"constant":3})");
  const CliRun piped = run_cli({"rank", vs_path, "--secondary", sec});
  const CliRun direct = run_cli({"rank", kCanonical, "--project", "generation", "--secondary", sec});
  ASSERT_EQ(piped.code, cli::kOk);
  EXPECT_EQ(piped.out, direct.out);

  const Network net = canonical_three_bus();
  const LpModel dc = build_dcopf(net);
  const LpModel boxed = apply_box_bounds(dc).model;
  VertexSet vs = enumerate_vertices(boxed, solve(dc).z_star, SublevelSpec::relative_gap(0));
  vs.model_fingerprint = fingerprint(dc);
  vs = project_set(vs, ProjectionSpec::by_role(dc, VariableRole::generation));
  const RankedAlternatives ranked =
      rank_alternatives(vs, {ObjectiveSense::maximize, {{"P_1", 2.0}, {"P_2", -1.0}}, 3.0});
  EXPECT_EQ(piped.out, dump_report(ranking_report(ranked)));
}

TEST_F(CliTest, UsageErrorsWriteNothing) {
  const std::string out = path("never.json");
  const CliRun both = run_cli({"enumerate", "--gap", "0.1", "--tau", "5000", kCanonical, "--output", out});
  EXPECT_EQ(both.code, cli::kUsage);
  EXPECT_TRUE(both.out.empty());
  EXPECT_FALSE(fs::exists(out));
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve", path("missing.json")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve", write("garbage.json", "{oops")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve", write("other.json", R"({"hello":1})")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"enumerate", "--gap", "-1", kCanonical}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"enumerate", "--box-bound", "0", kCanonical}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve", "--model", "ac", kCanonical}).code, cli::kUsage);
  const std::string dangling = write("dangling.json",
                                     R"({"schema":"aos-net/1","buses":[1],
                                         "lines":[{"from":1,"to":2,"reactance":1,"limit":1}]})");
  const CliRun d = run_cli({"solve", dangling, "--output", out});
  EXPECT_EQ(d.code, cli::kUsage);
  EXPECT_NE(d.err.find("dangling"), std::string::npos);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, GuardAndSolverFailureExitCodes) {
  std::string vars;
  for (int j = 0; j < 30; ++j) {
    vars += std::string(j ? "," : "") + R"({"name":"x)" + std::to_string(j) + R"(","lower":0,"upper":1})";
  }
  const std::string big = write("big.json", R"({"schema":"aos-lp/1","variables":[)" + vars + R"(],
      "objective":{"sense":"min","coeffs":{"x0":1}}})");
  EXPECT_EQ(run_cli({"oracle", big}).code, cli::kUsage);

  // An exhausted pivot budget is a solver breakdown, not an answer.
  const CliRun starved = run_cli({"solve", kCanonical, "--max-iterations", "1"});
  EXPECT_EQ(starved.code, cli::kNumericFailure);
  EXPECT_TRUE(starved.out.empty());
  EXPECT_EQ(run_cli({"enumerate", kCanonical, "--max-iterations", "1"}).code, cli::kNumericFailure);
}

TEST_F(CliTest, OutputFileMatchesStdout) {
  const std::string out = path("solve.json");
  const CliRun to_file = run_cli({"solve", kCanonical, "--output", out});
  ASSERT_EQ(to_file.code, cli::kOk);
  EXPECT_TRUE(to_file.out.empty());
  EXPECT_EQ(test::read_file(out), run_cli({"solve", kCanonical}).out);
  EXPECT_FALSE(fs::exists(out + ".tmp"));
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"solve", kCanonical},
           {"enumerate", kCanonical},
           {"enumerate", "--model", "nf", "--gap", "0.05", kCanonical},
           {"verify", "--gap", "0.1", kCanonical},
           {"enumerate", kPerturbed, "--gap", "0.01"},
       }) {
    const std::string first = run_cli(args).out;
    for (int i = 0; i < 3; ++i) EXPECT_EQ(run_cli(args).out, first);
  }
}

}  // namespace
}  // namespace aos
