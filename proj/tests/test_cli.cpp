#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

using namespace widecover;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "widecover");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("widecover_cli_" + name + "_" + std::to_string(::getpid())))
      .string();
}

}  // namespace

TEST(Cli, AnalyzeNonwide) {
  CliRun r = run({"analyze", "3,1,1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["wide"], false);
  EXPECT_EQ(j["tau2"], 4);
  EXPECT_EQ(j["nu2"], 4);
  EXPECT_EQ(j["wideness_witness"], Json::parse("[2,3]"));
  EXPECT_EQ(j["cover_witness"]["sizes"]["cover"], 4);
  EXPECT_FALSE(j["dominance_witness"].is_null());

  r = run({"analyze", "3,1,1"});
  EXPECT_NE(r.out.find("wide: no"), std::string::npos);
  EXPECT_NE(r.out.find("witness {2,3}"), std::string::npos);
  EXPECT_NE(r.out.find("tau2: 4"), std::string::npos);
  EXPECT_NE(r.out.find("nu2: 4"), std::string::npos);
}

TEST(Cli, AnalyzeWide) {
  CliRun r = run({"analyze", "2,1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("wide: yes"), std::string::npos);
  EXPECT_NE(r.out.find("tau2: 3"), std::string::npos);
  EXPECT_NE(r.out.find("nu2: 3"), std::string::npos);
  EXPECT_NE(r.out.find("Latin filling:\n[2][1]\n[1]\n"), std::string::npos);
}

TEST(Cli, AnalyzeEmpty) {
  CliRun r = run({"analyze", "", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 0);
  EXPECT_EQ(j["tau2"], 0);
  EXPECT_EQ(j["nu2"], 0);
  EXPECT_EQ(j["wide"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"sweep", "--check", "nonsense"}).code, 2);
  EXPECT_EQ(run({"analyze", "3,x"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"analyze", "50"}).code, 2);
  EXPECT_EQ(run({"summarize", "/nonexistent-dir/none.jsonl"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Sweep) {
  std::string path = temp_path("sweep");
  CliRun r = run({"sweep", "--max-n", "10", "--check", "wide-tau", "--out", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(" 0 disagree"), std::string::npos);
  r = run({"sweep", "--max-n", "8", "--check", "tau-nu", "--out", path, "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["disagreements"].size(), 0u);

  r = run({"sweep", "--max-n", "9", "--check", "tau-nu", "--out", path, "--resume", "--json"});
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["resumed"], 67);
  EXPECT_EQ(j["population"], 30);
  r = run({"summarize", path, "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["overall"]["population"], 97);
  std::filesystem::remove(path);
}

TEST(Cli, SweepDefaultOutputDirectory) {
  std::string dir = temp_path("outdir");
  std::filesystem::create_directories(dir);
  ::setenv(cli::kOutDirEnv, dir.c_str(), 1);
  CliRun r = run({"sweep", "--max-n", "4", "--check", "wpc"});
  ::unsetenv(cli::kOutDirEnv);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(dir) / "wpc.jsonl"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, Suites) {
  CliRun r = run({"formulas", "--max-pq", "0"});
  EXPECT_EQ(r.code, 0);
  r = run({"formulas", "--max-pq", "3", "--max-ell", "8", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["disagreements"].size(), 0u);
  r = run({"shift-fuzz", "--cases", "100", "--seed", "7", "--json"});
  EXPECT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["agreements"], 100);
  EXPECT_EQ(run({"formulas", "--max-pq", "-1"}).code, 2);
}

TEST(Cli, Witness) {
  CliRun r = run({"witness", "3,1,1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["cover_witness"]["subset"], Json::parse("[2,3]"));
  EXPECT_EQ(j["cover_witness"]["k"], 1);

  r = run({"witness", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("wide: yes"), std::string::npos);

  std::string path = temp_path("cover");
  {
    std::ofstream f(path);
    f << R"({"cs": [[1,1]]})";
  }
  r = run({"witness", "1,1", "--cover-json", path, "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["dominance_witness"]["subset"], Json::parse("[1,2]"));
  {
    std::ofstream f(path);
    f << R"({"rc": [[1,1]]})";
  }
  EXPECT_EQ(run({"witness", "1,1", "--cover-json", path}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, SummarizeFlagsTheoremViolations) {
  std::string path = temp_path("violation");
  SweepRecord rec = evaluate_partition(Campaign::wide_tau, {2, 1});
  rec.checks["wide-tau"] = false;
  persist_append(rec, path);
  CliRun r = run({"summarize", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("disagreement: 2,1"), std::string::npos);
  std::filesystem::remove(path);
}
