#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "monotone/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = monotone::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::filesystem::path kGolden = MONOTONE_GOLDEN_DIR;

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
  int code;
};

// Set MONOTONE_UPDATE_GOLDEN=1 to regenerate the files (then review the diff).
void check_golden(const GoldenCase& c) {
  std::vector<std::string> args = c.args;
  args.push_back("--no-meta");
  for (auto& a : args) {
    if (a.rfind("@golden/", 0) == 0) a = (kGolden / a.substr(8)).string();
  }
  const Result r = run(args);
  EXPECT_EQ(r.code, c.code) << r.err;
  const auto path = kGolden / c.file;
  if (std::getenv("MONOTONE_UPDATE_GOLDEN")) {
    std::ofstream(path) << r.out;
    return;
  }
  ASSERT_TRUE(std::filesystem::exists(path)) << path;
  EXPECT_EQ(r.out, read_file(path)) << c.file;
}

}  // namespace

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFile) { check_golden(GetParam()); }

INSTANTIATE_TEST_SUITE_P(
    Subcommands, Golden,
    ::testing::Values(
        GoldenCase{"nf_number_rule.json", {"nf", "a*(0) a(0)"}, 0},
        GoldenCase{"nf_center.txt", {"nf", "a*(0) a(2) a*(2) a(1)", "--format", "text"}, 0},
        GoldenCase{"verify_0_1.json", {"verify", "--window", "0..1"}, 0},
        GoldenCase{"verify_m2_2.txt", {"verify", "--window", "-2..2", "--format", "text"}, 0},
        GoldenCase{"dim_0_0_in_m1_1.json", {"dim", "--window", "0..0", "--carrier", "-1..1"}, 0},
        GoldenCase{"dim_m1_1_unital.txt", {"dim", "--window", "-1..1", "--unital", "--format", "text"}, 0},
        GoldenCase{"basis_0_1.json", {"basis", "--window", "0..1"}, 0},
        GoldenCase{"bratteli_3.dot", {"bratteli", "--levels", "3", "--format", "dot"}, 0},
        GoldenCase{"bratteli_3_computed.json", {"bratteli", "--levels", "3", "--computed"}, 0},
        GoldenCase{"bratteli_6.txt", {"bratteli", "--levels", "6", "--format", "text"}, 0},
        GoldenCase{"trace_monotone_6.json", {"trace", "--monotone", "--levels", "6"}, 0},
        GoldenCase{"trace_car.txt", {"trace", "--chain", "@golden/car_chain.json", "--format", "text"}, 0},
        GoldenCase{"k0_class.json", {"k0", "--levels", "3", "--class-rank", "3", "--class-level", "1"}, 0},
        GoldenCase{"k0_scale.txt", {"k0", "--levels", "2", "--scale-test", "1000", "--format", "text"}, 0},
        GoldenCase{"masa_m1_1.json", {"masa", "--window", "-1..1"}, 0},
        GoldenCase{"moments.txt", {"moments", "--n", "1,2,4,8,16,32", "--max-order", "6", "--format", "text"}, 0},
        GoldenCase{"moments_small.json", {"moments", "--n", "2", "--n", "4", "--max-order", "4"}, 0},
        GoldenCase{"projections_m2_2.json", {"projections", "--window", "-2..2"}, 0}),
    [](const auto& info) {
      std::string name = info.param.file;
      for (auto& ch : name) {
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
      }
      return name;
    });

TEST(Cli, NormalFormExample) {
  const Result r = run({"nf", "a*(0) a(0)", "--no-meta"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["word"], nlohmann::json::parse(R"([["a",-1],["c",-1]])"));
  EXPECT_EQ(j["terms"][0]["num"], 1);
  EXPECT_EQ(j["terms"][1]["word"], nlohmann::json::parse(R"([["a",0],["c",0]])"));
  EXPECT_EQ(j["terms"][1]["num"], -1);
}

TEST(Cli, VerifyPasses) {
  const Result r = run({"verify", "--window", "-2..2", "--no-meta"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["pass"].get<bool>());
}

TEST(Cli, MetaEnvelope) {
  const Result r = run({"bratteli", "--levels", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["meta"].contains("timestamp"));
  EXPECT_EQ(j["meta"]["tool"], "monotone");
  EXPECT_EQ(j["result"]["levels"].size(), 2u);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"masa", "--window", "0..1", "--no-meta"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, monotone::cli::usage_error);
  EXPECT_EQ(run({"frobnicate"}).code, monotone::cli::usage_error);
  EXPECT_EQ(run({"verify"}).code, monotone::cli::usage_error);
  EXPECT_EQ(run({"verify", "--window", "2..-2"}).code, monotone::cli::usage_error);
  EXPECT_EQ(run({"verify", "--window", "0..1", "--carrier", "1..2"}).code, monotone::cli::usage_error);
  EXPECT_EQ(run({"nf", "a(-3) a*(x)"}).code, monotone::cli::usage_error);
  EXPECT_EQ(run({"masa", "--window", "0..1", "--format", "dot"}).code, monotone::cli::usage_error);
  EXPECT_EQ(run({"k0", "--levels", "2", "--class-rank", "9", "--class-level", "0"}).code, monotone::cli::usage_error);
  EXPECT_EQ(run({"trace"}).code, monotone::cli::usage_error);
  EXPECT_EQ(run({"trace", "--chain", "/nonexistent/chain.json"}).code, monotone::cli::usage_error);
  const Result r = run({"nf", "a(-3) a*(x)"});
  EXPECT_NE(r.err.find("position 9"), std::string::npos) << r.err;
}

TEST(Cli, BudgetErrors) {
  EXPECT_EQ(run({"bratteli", "--levels", "5", "--computed"}).code, monotone::cli::budget_exceeded);
  EXPECT_EQ(run({"moments", "--n", "33", "--max-order", "2"}).code, monotone::cli::budget_exceeded);
  EXPECT_EQ(run({"moments", "--n", "4", "--max-order", "8"}).code, monotone::cli::budget_exceeded);
  EXPECT_EQ(run({"basis", "--window", "0..10"}).code, monotone::cli::budget_exceeded);
}

TEST(Cli, HelpIsSuccess) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("bratteli"), std::string::npos);
}

TEST(Cli, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "monotone_cli_test.json";
  std::filesystem::remove(path);
  const Result r = run({"basis", "--window", "0..0", "--no-meta", "-o", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const auto j = nlohmann::json::parse(read_file(path));
  EXPECT_EQ(j["fock_dim"], 2);
  std::filesystem::remove(path);
}
