#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using namespace sectorlab::cli;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sectorlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("sectorlab-cli-" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, DomainVerifyWritesAPassingReport) {
  auto dir = scratch("domain");
  auto r = invoke({"domain", "verify", "--n", "2", "--q", "2", "--r", "4", "--out-dir", dir.string()});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  EXPECT_EQ(report["schema_version"], kSchemaVersion);
  EXPECT_EQ(report["status"], "PASS");
  EXPECT_EQ(report["parameters"]["gen_degree"], 5);
  EXPECT_FALSE(report["parameters"].contains("workers"));
  EXPECT_TRUE(report.contains("probes"));
}

TEST(Cli, InvalidParametersExitWithUsage) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"domain", "verify", "--q", "4"},
                                                                {"domain", "verify", "--n", "1"},
                                                                {"stab", "verify", "--workers", "0"},
                                                                {"rootsys", "info", "--family", "E"},
                                                                {"nonsense"},
                                                                {}}) {
    auto r = invoke(args);
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
  }
}

TEST(Cli, FailAndInconclusiveExitCodes) {
  auto dir = scratch("codes");
  EXPECT_EQ(invoke({"chevalley", "bn-check", "--degenerate", "--out-dir", dir.string()}).code, kExitFail);
  EXPECT_EQ(invoke({"domain", "verify", "--r", "3", "--max-orbit-steps", "5", "--out-dir", dir.string()}).code,
            kExitInconclusive);
}

TEST(Cli, SuiteAggregatesFourSuites) {
  auto dir = scratch("suite");
  auto r = invoke({"suite", "all", "--n", "2", "--q", "3", "--r", "3", "--out-dir", dir.string(), "--json", "s.json"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  auto report = nlohmann::json::parse(slurp(dir / "s.json"));
  for (const char* k : {"domain", "stabilizers", "homology", "simpalg"}) {
    ASSERT_TRUE(report["result"].contains(k)) << k;
    EXPECT_EQ(report["result"][k]["status"], "PASS");
  }
}

TEST(Cli, ReportsAreWorkerIndependent) {
  RunConfig c;
  c.command = "suite all";
  c.n = 3;
  c.r = 1;
  c.out_dir = scratch("det").string();
  c.workers = 1;
  auto a = render(run(c).report);
  c.workers = 8;
  auto b = render(run(c).report);
  EXPECT_EQ(a, b);
}

TEST(Cli, BuildingBallWritesDot) {
  auto dir = scratch("dot");
  auto r = invoke({"building", "ball", "--n", "2", "--q", "2", "--r", "2", "--dot", "ball.dot", "--out-dir", dir.string()});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  auto dot = slurp(dir / "ball.dot");
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  EXPECT_EQ(report["result"]["vertex_count"], 10);
}

TEST(Cli, EnvironmentSetsDefaultOutputDirectory) {
  auto dir = scratch("env");
  setenv("SECTORLAB_OUT_DIR", dir.string().c_str(), 1);
  auto r = invoke({"rootsys", "info", "--family", "D", "--rank", "4"});
  unsetenv("SECTORLAB_OUT_DIR");
  EXPECT_EQ(r.code, kExitPass);
  auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  EXPECT_EQ(report["result"]["root_count"], 24);
  EXPECT_EQ(report["result"]["highest_root_multiplicities"], nlohmann::json({1, 2, 1, 1}));
}
