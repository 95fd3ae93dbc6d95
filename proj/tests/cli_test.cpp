#include "syrt/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "syrt/json_io.hpp"

namespace syrt {
namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, SimpleVerb) {
  RunResult r = run_cli({"simple", "--shape", "2,3,1,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "not simple\n");
  EXPECT_EQ(run_cli({"simple", "--shape", "2,1,1,3"}).out, "simple\n");

  RunResult json = run_cli({"simple", "--shape", "4,2,1,2", "--format", "json"});
  EXPECT_EQ(json.code, 0);
  Json parsed = Json::parse(json.out);
  EXPECT_EQ(parsed["simple"], true);
  EXPECT_EQ(parsed["shape"], Json::array({4, 2, 1, 2}));
}

TEST(Cli, EnumGolden) {
  RunResult r = run_cli({"enum", "--shape", "3,2,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "shape (3,2,2): 5 tableaux\n"
            "[0] Des = {1,2,4,6}\n"
            "  6 7\n"
            "  4 5\n"
            "  1 2 3\n"
            "[1] Des = {1,2,5}\n"
            "  5 6\n"
            "  4 7\n"
            "  1 2 3\n"
            "[2] Des = {1,3,6}\n"
            "  6 7\n"
            "  3 5\n"
            "  1 2 4\n"
            "[3] Des = {1,3,5}\n"
            "  5 6\n"
            "  3 7\n"
            "  1 2 4\n"
            "[4] Des = {1,4}\n"
            "  4 6\n"
            "  3 7\n"
            "  1 2 5\n");
}

TEST(Cli, EnumJsonSchema) {
  RunResult r = run_cli({"enum", "--shape", "2,2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  Json parsed = Json::parse(r.out);
  EXPECT_EQ(parsed["count"], 2);
  EXPECT_EQ(parsed["shape"], Json::parse("[2,2]"));
  ASSERT_EQ(parsed["tableaux"].size(), 2u);
  EXPECT_EQ(parsed["tableaux"][0]["tableau"],
            Json::parse("{\"rows\":[[1,2],[3,4]],\"shape\":[2,2]}"));
  EXPECT_EQ(parsed["tableaux"][1]["tableau"]["rows"],
            Json::parse("[[1,4],[2,3]]"));
  EXPECT_EQ(parsed["tableaux"][0]["descents"], Json::parse("[1,3]"));
  EXPECT_EQ(parsed["tableaux"][1]["descents"], Json::parse("[2]"));
}

TEST(Cli, SeriesJsonSchema) {
  RunResult r = run_cli({"series", "--shape", "2,2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  Json parsed = Json::parse(r.out);
  ASSERT_EQ(parsed["quotients"].size(), 2u);
  // top of the filtration first; every prefix spans a submodule
  EXPECT_EQ(parsed["quotients"][0]["composition"], Json::parse("[2,2]"));
  EXPECT_EQ(parsed["quotients"][0]["rank"], 0);
  EXPECT_EQ(parsed["quotients"][1]["composition"], Json::parse("[1,2,1]"));
  ASSERT_EQ(parsed["multiset"].size(), 2u);
  EXPECT_EQ(parsed["multiset"][0]["comp"], Json::parse("[2,2]"));
  EXPECT_EQ(parsed["multiset"][0]["count"], 1);
}

TEST(Cli, ExpandJsonGolden) {
  RunResult r = run_cli({"expand", "--shape", "2,2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  Json parsed = Json::parse(r.out);
  EXPECT_EQ(parsed["basis"], "F");
  ASSERT_EQ(parsed["terms"].size(), 2u);
  EXPECT_EQ(parsed["terms"][0]["comp"], Json::array({2, 2}));
  EXPECT_EQ(parsed["terms"][0]["coeff"], 1);
  EXPECT_EQ(parsed["terms"][1]["comp"], Json::array({1, 2, 1}));
  EXPECT_EQ(parsed["terms"][1]["coeff"], 1);
}

TEST(Cli, ExpandMonomialBasis) {
  // R_(2) = F_(1,1) = M_(1,1); R_(1,1) = F_(2) = M_(2) + M_(1,1)
  RunResult r = run_cli({"expand", "--shape", "2", "--basis", "M"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "R_(2) = M_(1,1)\n");
  EXPECT_EQ(run_cli({"expand", "--shape", "1,1", "--basis", "M"}).out,
            "R_(1,1) = M_(2) + M_(1,1)\n");
}

TEST(Cli, TsupMatchesPaperDisplay) {
  RunResult r = run_cli({"tsup", "--shape", "2,5,1,3,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("boundary cells: (1,1) (1,2) (1,3) (1,4) (1,5) (2,5) (3,5) (5,2)"),
            std::string::npos);
  EXPECT_NE(r.out.find(" 9 12 13\n"), std::string::npos);
  EXPECT_NE(r.out.find(" 3  4  7 10 14\n"), std::string::npos);

  RunResult json = run_cli({"tsup", "--shape", "3,2,2", "--format", "json"});
  Json parsed = Json::parse(json.out);
  EXPECT_EQ(parsed["t_sup"]["rows"], Json::parse("[[1,2,4],[3,5],[6,7]]"));
  EXPECT_EQ(parsed["t_sup"]["shape"], Json::parse("[3,2,2]"));
  // cells as [col,row]; threads as arrays of cells
  EXPECT_EQ(parsed["boundary"], Json::parse("[[1,1],[1,2],[1,3],[2,3]]"));
  EXPECT_EQ(parsed["threads"],
            Json::parse("[[[1,1]],[[1,2],[2,1]],[[1,3],[2,2],[3,1]],[[2,3]]]"));
}

TEST(Cli, ClassesVerb) {
  RunResult r = run_cli({"classes", "--shape", "3,2,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2 classes"), std::string::npos);
  EXPECT_NE(r.out.find("class 0 (E_0): size 2, members [0 2], source 2"),
            std::string::npos);
  EXPECT_NE(r.out.find("class 1: size 3, members [1 3 4], source 4"),
            std::string::npos);
}

TEST(Cli, VerifyAndSeries) {
  EXPECT_EQ(run_cli({"verify", "--shape", "3,2,2"}).code, 0);
  RunResult series = run_cli({"series", "--shape", "2,2"});
  EXPECT_EQ(series.code, 0);
  EXPECT_NE(series.out.find("characteristic: F_(2,2) + F_(1,2,1)"),
            std::string::npos);
}

TEST(Cli, VerifyJsonCarriesTheActionDump) {
  RunResult r = run_cli({"verify", "--shape", "2,2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  Json parsed = Json::parse(r.out);
  EXPECT_EQ(parsed["ok"], true);
  const Json& action = parsed["action"];
  ASSERT_EQ(action["basis"].size(), 2u);
  EXPECT_EQ(action["basis"][0]["rows"], Json::parse("[[1,2],[3,4]]"));
  ASSERT_EQ(action["generators"].size(), 3u);
  // pi_2 annihilates the tableau with rows [1,4],[2,3] (basis index 1)
  EXPECT_EQ(action["generators"][1][1]["from"], 1);
  EXPECT_EQ(action["generators"][1][1]["kind"], "zero");
  EXPECT_TRUE(action["generators"][1][1]["to"].is_null());
  // pi_1 fixes it: 2 is weakly left of 1
  EXPECT_EQ(action["generators"][0][1]["kind"], "fixed");
  EXPECT_EQ(action["generators"][0][1]["to"], 1);
}

TEST(Cli, CertifySchema) {
  RunResult r = run_cli({"certify", "--shape", "2,2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  Json parsed = Json::parse(r.out);
  EXPECT_EQ(parsed["alpha"], Json::array({2, 2}));
  EXPECT_EQ(parsed["simple"], false);
  EXPECT_EQ(parsed["classes"], 2);
  EXPECT_EQ(parsed["verdict"], "decomposable");
  EXPECT_EQ(parsed["e0"]["dim"], 1);
  EXPECT_EQ(parsed["e0"]["commutant_dim"], 1);
  EXPECT_EQ(parsed["e0"]["radical_dim"], 0);
  EXPECT_EQ(parsed["e0"]["local"], true);
  EXPECT_TRUE(parsed.contains("full"));
}

TEST(Cli, SweepIsDeterministicAndConsistent) {
  RunResult first = run_cli({"sweep", "--n", "6"});
  RunResult second = run_cli({"sweep", "--n", "6"});
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(first.out.find("32 shapes, all verdicts match simplicity"),
            std::string::npos);

  Json parsed = Json::parse(run_cli({"sweep", "--n", "4", "--format", "json"}).out);
  EXPECT_EQ(parsed["all_match"], true);
  ASSERT_EQ(parsed["rows"].size(), 8u);
  for (const auto& row : parsed["rows"])
    EXPECT_EQ(row["verdict"] == "indecomposable", row["simple"] == true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 2);                                     // no verb
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);                         // bad verb
  EXPECT_EQ(run_cli({"enum"}).code, 2);                               // no shape
  EXPECT_EQ(run_cli({"enum", "--shape", "3,x"}).code, 2);             // bad shape
  EXPECT_EQ(run_cli({"enum", "--shape", "0,1"}).code, 2);             // bad part
  EXPECT_EQ(run_cli({"enum", "--shape", "6,5"}).code, 3);             // over cap
  EXPECT_EQ(run_cli({"certify", "--shape", "4,4"}).code, 3);          // over cap
  EXPECT_EQ(run_cli({"sweep", "--n", "9"}).code, 3);                  // over cap
  EXPECT_EQ(run_cli({"enum", "--shape", "1,1,1,1,1,1,1,1,1,1,1", "--max-size", "11"}).code, 0);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, EnvVarOverridesDefaultCap) {
  ASSERT_EQ(setenv("SYRT_MAX_SIZE", "11", 1), 0);
  EXPECT_EQ(run_cli({"enum", "--shape", "6,5"}).code, 0);
  // an explicit --max-size still wins
  EXPECT_EQ(run_cli({"enum", "--shape", "6,5", "--max-size", "10"}).code, 3);
  ASSERT_EQ(setenv("SYRT_MAX_SIZE", "bogus", 1), 0);
  EXPECT_EQ(run_cli({"enum", "--shape", "2,2"}).code, 2);
  ASSERT_EQ(unsetenv("SYRT_MAX_SIZE"), 0);
}

TEST(Cli, OutFileReceivesPayload) {
  std::string path = ::testing::TempDir() + "/syrt_cli_out.txt";
  RunResult r = run_cli({"simple", "--shape", "3,1", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(buffer.str(), "simple\n");
  std::remove(path.c_str());
}

TEST(Cli, ByteStableAcrossRuns) {
  for (const char* verb : {"enum", "expand", "classes", "tsup", "series"}) {
    RunResult a = run_cli({verb, "--shape", "3,2,2", "--format", "json"});
    RunResult b = run_cli({verb, "--shape", "3,2,2", "--format", "json"});
    EXPECT_EQ(a.code, 0) << verb;
    EXPECT_EQ(a.out, b.out) << verb;
  }
}

}  // namespace
}  // namespace syrt
