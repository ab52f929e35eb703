#include "facecount/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

using namespace facecount;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "facecount");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, FvectorOracleMatch) {
  const auto r = cli({"fvector", "J:s=3,d=5", "--oracle"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("formula: (12, 32, 39, 25, 8)"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: MATCH"), std::string::npos);
}

TEST(Cli, FvectorWithoutFormulaUsesStatedCounts) {
  const auto r = cli({"fvector", "sigma:d=4", "--oracle"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("MATCH-STATED-COUNTS"), std::string::npos);
}

TEST(Cli, FvectorJsonHasStringCounts) {
  const auto r = cli({"fvector", "tmprod:d=5,a=5,m=2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.dump().find("\"12\"") != std::string::npos, true);
  EXPECT_NE(r.out.find("NOT-RUN"), std::string::npos);
}

TEST(Cli, JsonAndCsvAreByteIdentical) {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"fvector", "A:d=4", "--oracle", "--format", "json"},
        std::vector<std::string>{"table", "--which", "tau", "--d", "5..9", "--format", "csv"},
        std::vector<std::string>{"verify", "--suite", "existence", "--d-max", "40", "--format", "json", "--workers", "2"},
        std::vector<std::string>{"dump", "C:d=3"}}) {
    const auto a = cli(args), b = cli(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(cli({"verify", "--suite", "existence", "--d-max", "60"}).code, 0);
  EXPECT_EQ(cli({"verify", "--suite", "tau_minimality", "--d-max", "8"}).code, 1);
  EXPECT_EQ(cli({"verify", "--suite", "tau_minimality", "--d-max", "9", "--s-set", "3"}).code, 1);
  EXPECT_EQ(cli({"verify", "--suite", "tau_minimality", "--d-max", "4", "--s-set", "2"}).code, 0);
  EXPECT_EQ(cli({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(cli({"verify", "--suite", "dichotomy", "--d-max", "5"}).code, 2);
  EXPECT_EQ(cli({"verify", "--suite", "all", "--d-max", "5"}).code, 2);
}

TEST(Cli, BadArgumentsExitTwo) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"fvector", "bogus:d=3"}).code, 2);
  EXPECT_EQ(cli({"fvector", "J:s=9,d=4"}).code, 2);
  EXPECT_EQ(cli({"fvector", "J:s=3,d=5", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"table", "--which", "eta", "--d", "7..3"}).code, 2);
  EXPECT_EQ(cli({"table", "--which", "nope", "--d", "3..4"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, OracleGuard) {
  const auto r = cli({"dump", "tmprod:d=12,a=12,m=6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--force-oracle"), std::string::npos);
  EXPECT_EQ(cli({"fvector", "tmprod:d=12,a=12,m=6"}).code, 0);
  EXPECT_EQ(cli({"fvector", "tmprod:d=12,a=12,m=6", "--oracle"}).code, 2);
}

TEST(Cli, TableFormats) {
  const auto md = cli({"table", "--which", "eta", "--d", "3..3", "--format", "md"});
  EXPECT_EQ(md.out, "| d | k | eta_k(2d+2,d) |\n|---|---|---|\n| 3 | 1 | 12 |\n| 3 | 2 | 6 |\n");
  const auto csv = cli({"table", "--which", "tau", "--d", "5..5", "--format", "csv"});
  EXPECT_EQ(csv.out, "d,k,\"tau_k(2d+2,d)\"\n5,1,30\n5,2,34\n5,3,21\n5,4,7\n");
  const auto json = Json::parse(cli({"table", "--which", "dichotomy", "--d", "9..10", "--format", "json"}).out);
  EXPECT_FALSE(json.empty());
  EXPECT_EQ(cli({"table", "--which", "minimisers", "--d", "4..6", "--format", "csv"}).code, 0);
}

TEST(Cli, DumpRoundTrips) {
  const auto r = cli({"dump", "A:d=4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  const auto p = polytope_from_json(j.at("polytope"));
  EXPECT_EQ(incidence_from_json(j.at("incidence")), p.incidence());
  EXPECT_EQ(fvector_from_json(j.at("fvector")), face_lattice(p).f_vector());
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "facecount_cli_out_test.json";
  std::filesystem::remove(path);
  const auto r = cli({"fvector", "simplex:d=3", "--oracle", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path), cli({"fvector", "simplex:d=3", "--oracle", "--format", "json"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = FACECOUNT_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("fvector J:s=3,d=5 --oracle"), 0);
  EXPECT_EQ(status("verify --suite tau_minimality --d-max 8"), 1);
  EXPECT_EQ(status("fvector nope"), 2);
}
