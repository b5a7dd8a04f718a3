#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "wigflow/errors.hpp"
#include "wigflow/grid.hpp"

namespace wigflow::cli {

/// Bad command line: unknown subcommand or id, malformed parameters.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Output directory could not be created or written.
class IoError : public Error {
 public:
  using Error::Error;
};

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitIo = 3, kExitRuntime = 4 };

/// Overrides the default output directory; --out takes precedence.
inline constexpr const char* kOutDirEnv = "WIGFLOW_OUT_DIR";
inline constexpr const char* kDefaultOutDir = "wigflow_out";
inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::size_t grid_n = 512;
  double q_span = 40.0;  // full width of the q grid, centered on 0
  double hbar = 1.0;
  double mass = 1.0;
  std::filesystem::path output_dir = kDefaultOutDir;
  bool emit_png = false;

  /// Throws UsageError unless grid_n is a power of two >= 128, q_span > 0,
  /// hbar > 0 and mass > 0.
  void validate() const;

  PhysContext ctx() const { return {hbar, mass}; }

  /// Square of 512 / grid_n, at least 1: the verify suites scale their
  /// tolerances by it on coarse grids.
  double tolerance_scale() const;
};

/// --out if given, else $WIGFLOW_OUT_DIR if set and nonempty, else the default.
std::filesystem::path resolve_output_dir(const std::optional<std::string>& flag);

/// Creates the directory if needed; throws IoError if that fails or the
/// directory is not writable.
void ensure_output_dir(const std::filesystem::path& dir);

}  // namespace wigflow::cli
