#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecut/construction.hpp"

namespace ecut::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Bad or missing user input; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
  std::string command;  // build, spectral, profile, hitting, cutoff-report, cylinder-sweep, nocutoff-demo
  ConstructionParams params;
  std::filesystem::path output_dir = ".";
  std::optional<std::uint64_t> seed;
  std::string format = "json";  // json or csv
  int threads = 0;               // 0: hardware concurrency

  std::int64_t t_max = 0;  // 0: command default
  std::int64_t stride = 0;
  std::optional<double> laziness;
  std::vector<double> eps;
  std::size_t samples = 10000;
  bool write_samples = false;
  std::optional<std::filesystem::path> graph;  // analyze this file instead of building
  std::optional<std::uint32_t> start;
  std::vector<int> h_values;  // cutoff-report sweep
  std::vector<int> L_values;  // cylinder-sweep
};

// key=value lines; '#' starts a comment. Keys match the long flag names.
void apply_config_file(const std::filesystem::path& path, RunConfig& cfg);
void apply_setting(const std::string& key, const std::string& value, RunConfig& cfg);

// Executes the command, writing artifacts under cfg.output_dir and one
// summary line per artifact to `log`. Returns the process exit status:
// 0 success, 2 usage error, 1 analysis error (diagnostic on `err`).
int run(const RunConfig& cfg, std::ostream& log, std::ostream& err);

}  // namespace ecut::cli
