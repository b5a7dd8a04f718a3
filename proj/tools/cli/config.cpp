#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <system_error>

namespace wigflow::cli {

void RunConfig::validate() const {
  if (grid_n < 128 || (grid_n & (grid_n - 1)) != 0) {
    throw UsageError("--grid-n must be a power of two >= 128, got " + std::to_string(grid_n));
  }
  if (!(q_span > 0.0)) throw UsageError("--q-span must be positive");
  if (!(hbar > 0.0)) throw UsageError("--hbar must be positive");
  if (!(mass > 0.0)) throw UsageError("--mass must be positive");
}

double RunConfig::tolerance_scale() const {
  const double r = 512.0 / static_cast<double>(grid_n);
  return r > 1.0 ? r * r : 1.0;
}

std::filesystem::path resolve_output_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
  return kDefaultOutDir;
}

void ensure_output_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string() + (ec ? ": " + ec.message() : ""));
  }
  const auto probe = dir / ".wigflow_write_test";
  {
    std::ofstream f(probe);
    if (!f) throw IoError("output directory " + dir.string() + " is not writable");
  }
  std::filesystem::remove(probe, ec);
}

}  // namespace wigflow::cli
