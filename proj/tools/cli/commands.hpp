#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace wigflow::cli {

/// Writes the data behind figure id (1..6) into cfg.output_dir and returns
/// the file names written. Throws UsageError for any other id.
std::vector<std::string> cmd_figure(int id, const RunConfig& cfg);

struct CheckResult {
  std::string check;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  std::string relation;  // "abs" for |actual - expected| <= tolerance, "<=" or ">=" otherwise
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  nlohmann::ordered_json to_json(const RunConfig& cfg) const;
};

/// suite is one of all, wigner, flows, analysis; anything else is a
/// UsageError. Writes verify_<suite>.json into cfg.output_dir.
VerifyReport cmd_verify(const std::string& suite, const RunConfig& cfg);

/// quantity is width or prob_right. params is a comma-separated key=value
/// list and t_range is "min,max,steps" with steps >= 2. Writes
/// sweep_<quantity>.csv and returns its name.
std::string cmd_sweep(const std::string& quantity, const std::string& params, const std::string& t_range,
                      const RunConfig& cfg);

/// Entry point shared by the executable and the tests; returns the exit code.
int run(int argc, const char* const* argv);

}  // namespace wigflow::cli
