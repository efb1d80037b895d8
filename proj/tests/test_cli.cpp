#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "robustham/cli.hpp"
#include "robustham/io.hpp"
#include "robustham/models.hpp"

using nlohmann::json;
using namespace robustham;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string kGolden = GOLDEN_DIR;

}  // namespace

TEST(Cli, BoundsF) {
  const auto r = run({"bounds", "f", "--n", "6", "--delta", "3"});
  EXPECT_EQ(r.code, cli::kOk);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["f"], 2);
  EXPECT_EQ(doc["command"], "bounds f");
  EXPECT_EQ(doc["config"]["n"], 6);
}

TEST(Cli, ExactRefutationOfTwoCliques) {
  const std::string g = to_edge_list(disjoint_union(complete_digraph(5), complete_digraph(5)));
  const auto r = run({"expand", "check", "--mode", "exact", "--nu", "0.05", "--tau", "0.3"}, g);
  EXPECT_EQ(r.code, cli::kNegative);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["verdict"], "refuted");
  EXPECT_EQ(doc["result"]["witness"], json({0, 1, 2, 3, 4}));
  EXPECT_EQ(doc["result"]["params"]["nu"], "1/20");
}

TEST(Cli, TrivialFactorInfeasibility) {
  const std::string g = to_edge_list(complete_digraph(4));
  const auto r = run({"factor", "--r", "99"}, g);
  EXPECT_EQ(r.code, cli::kNegative);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["status"], "trivially_infeasible");
  EXPECT_FALSE(doc["result"]["reason"].get<std::string>().empty());
  const auto u = run({"factor", "--r", "99"}, to_edge_list(complete_graph(4)));
  EXPECT_EQ(u.code, cli::kNegative);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"bounds", "f", "--n", "6"}).code, cli::kUsage);
  EXPECT_EQ(run({"bounds", "f", "--n", "6", "--delta", "3", "--unknown"}).code, cli::kUsage);
  EXPECT_EQ(run({"bounds", "f", "--n", "8", "--delta", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "tournament", "--n", "5"}).code, cli::kUsage);
  EXPECT_EQ(run({"orient", "--mode", "random"}, to_edge_list(complete_graph(5))).code, cli::kUsage);
  EXPECT_EQ(run({"expand", "check", "--mode", "exact", "--nu", "1/2", "--tau", "1/4"}, "3 0 directed\n").code,
            cli::kUsage);
}

TEST(Cli, MalformedInputHasPosition) {
  const auto r = run({"factor", "--r", "1"}, "3 1 undirected\n0 9\n");
  EXPECT_EQ(r.code, cli::kDataError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_NE(r.err.find("column"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("experiment"), std::string::npos);
  EXPECT_EQ(run({"hamilton", "pack", "--help"}).code, cli::kOk);
}

TEST(Cli, HypothesisNotMetIsInconclusive) {
  Graph g = complete_graph(6);
  g.remove_edge(0, 1);
  const auto r = run({"matchings-extract"}, to_edge_list(g));
  EXPECT_EQ(r.code, cli::kInconclusive);
  EXPECT_EQ(json::parse(r.out)["result"]["status"], "hypothesis_not_met");
}

TEST(Cli, HamiltonExitCodes) {
  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_EQ(run({"hamilton", "find"}, to_edge_list(petersen)).code, cli::kNegative);
  EXPECT_EQ(run({"hamilton", "find", "--budget-nodes", "3", "--restarts", "1"}, to_edge_list(petersen)).code,
            cli::kInconclusive);
  EXPECT_EQ(run({"hamilton", "pack", "--target", "2"}, to_edge_list(complete_graph(5))).code, cli::kOk);
}

TEST(Cli, GeneratorPipesIntoAnalysis) {
  const auto gen = run({"gen", "paley", "--q", "13"});
  ASSERT_EQ(gen.code, cli::kOk);
  const auto eigen = run({"expand", "eigen"}, gen.out);
  ASSERT_EQ(eigen.code, cli::kOk);
  EXPECT_NEAR(json::parse(eigen.out)["result"]["lambda"].get<double>(), 2.302775637731995, 1e-9);
  const auto edges = run({"gen", "paley", "--q", "13", "--graph-format", "edges"});
  EXPECT_EQ(run({"expand", "eigen"}, edges.out).out, eigen.out);
}

TEST(Cli, TextFormat) {
  const auto r = run({"--format", "text", "bounds", "f", "--n", "6", "--delta", "3"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("result.f\t2"), std::string::npos);
}

TEST(Cli, ExperimentJsonLines) {
  const auto r = run({"experiment", "tourn-edges", "--n", "100", "--trials", "3", "--seed", "5", "--pairs", "10"});
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto doc = json::parse(line);
    if (count == 0) {
      EXPECT_EQ(doc["config"]["seed"], 5);
    } else {
      EXPECT_EQ(doc["trial"], count - 1);
      EXPECT_FALSE(doc.contains("runtime_seconds"));
    }
    ++count;
  }
  EXPECT_EQ(count, 4);
}

TEST(Cli, JobsDoNotChangeOutput) {
  const std::vector<std::string> base{"experiment", "tourn-edges", "--n", "120", "--trials", "5", "--seed", "2",
                                      "--pairs", "10"};
  auto parallel = base;
  parallel.insert(parallel.end(), {"--jobs", "3"});
  const auto a = run(base);
  const auto b = run(parallel);
  // Only the echoed --jobs value in the header differs.
  EXPECT_EQ(a.out.substr(a.out.find('\n')), b.out.substr(b.out.find('\n')));
}

struct GoldenCase {
  const char* name;
  std::vector<std::string> args;
  const char* input_file;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, ByteStable) {
  const auto& c = GetParam();
  const std::string input = c.input_file[0] ? read_file(kGolden + "/" + c.input_file) : "";
  const auto first = run(c.args, input);
  const auto second = run(c.args, input);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, read_file(kGolden + "/" + c.name + ".out")) << first.out;
}

INSTANTIATE_TEST_SUITE_P(
    Cli, Golden,
    ::testing::Values(
        GoldenCase{"bounds_f", {"bounds", "f", "--n", "6", "--delta", "3"}, ""},
        GoldenCase{"bounds_g", {"bounds", "g", "--n", "10", "--delta", "6"}, ""},
        GoldenCase{"gen_extremal", {"gen", "extremal", "--n", "6", "--delta", "3"}, ""},
        GoldenCase{"gen_tournament", {"gen", "tournament", "--n", "7", "--seed", "11", "--graph-format", "edges"}, ""},
        GoldenCase{"factor_extremal", {"factor", "--r", "3"}, "extremal_6_3.txt"},
        GoldenCase{"reg_extremal", {"reg"}, "extremal_6_3.txt"},
        GoldenCase{"expand_exact", {"expand", "check", "--mode", "exact", "--nu", "0.05", "--tau", "0.3"},
                   "two_cliques.txt"},
        GoldenCase{"expand_sample", {"expand", "check", "--mode", "sample", "--nu", "1/20", "--tau", "3/10", "--trials",
                                     "200", "--seed", "4"},
                   "two_cliques.txt"},
        GoldenCase{"orient_pipeline", {"orient", "--mode", "paper-pipeline", "--seed", "3"}, "circulant_20.txt"},
        GoldenCase{"balance_c4", {"balance"}, "c4_oriented.txt"},
        GoldenCase{"pack_k5", {"hamilton", "pack", "--target", "2"}, "k5.txt"},
        GoldenCase{"experiment_erdos", {"experiment", "erdos", "--n", "7", "--trials", "3", "--seed", "1"}, ""}),
    [](const auto& info) { return std::string(info.param.name); });
