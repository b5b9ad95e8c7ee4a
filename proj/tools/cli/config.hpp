#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qns/ns.hpp"

namespace qns::cli {

/// Invalid or unreadable configuration; maps to exit status 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyConfig {
  std::uint64_t seed = 7;
  int trials = 100;
  /// Any of battery, algebra, flow.
  std::vector<std::string> suites{"battery", "algebra", "flow"};
};

struct RunConfig {
  SolverConfig solver;
  std::filesystem::path out_dir = "out";
  VerifyConfig verify;
  std::vector<double> sweep_thetas{0.4, 0.2, 0.1, 0.05};
  std::filesystem::path input_snapshot;
};

/// Checks every key and value; unknown keys are rejected.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace qns::cli
