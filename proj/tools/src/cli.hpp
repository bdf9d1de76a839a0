#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sectorlab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;  // "domain verify", "suite all", ...
  int n = 2;
  std::uint32_t q = 2;
  int r = 2;
  std::optional<int> gen_degree;     // default r + 1
  std::optional<int> search_degree;  // default r
  int window_slack = 0;
  std::size_t max_orbit_steps = 50'000'000;
  std::size_t vertex_budget = 200'000;
  std::string family = "A";
  int rank = 2;
  bool degenerate = false;
  bool abelian_table = false;
  int nmax = 4;
  std::size_t samples = 25;
  std::uint64_t seed = 7;
  std::size_t workers = 1;
  std::string out_dir = ".";
  std::string json_path = "report.json";  // relative paths resolve against out_dir
  std::optional<std::string> dot_path;
};

/// Empty when the configuration is valid, else the reason.
std::string validate(const RunConfig& config);

struct RunResult {
  int exit_code = kExitPass;
  nlohmann::ordered_json report;
  std::string summary;  // human-readable lines
};

/// Runs one command, writing JSON/DOT files when requested.
RunResult run(const RunConfig& config);

/// Serialized report exactly as written to disk.
std::string render(const nlohmann::ordered_json& report);

/// Full command line entry point (argument parsing, usage errors, output).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sectorlab::cli
