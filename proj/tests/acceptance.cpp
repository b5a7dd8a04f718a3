// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "cli/scenarios.hpp"

namespace fs = std::filesystem;
using namespace wigflow;
using namespace wigflow::cli;

namespace {

constexpr std::size_t kGridN = 512;
constexpr double kPi = std::numbers::pi;
const PhysContext kCtx{};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [out of tolerance]");
  }
};

std::string num(double x) { return fmt::format("{:.4g}", x); }

Outcome c1_gaussian_oracle() {
  Outcome o;
  const auto r = gaussian_closed_form(kGridN, kCtx);
  o.require(r.max_error < 1e-6, "Linf=" + num(r.max_error) + " < 1e-6");
  o.require(std::abs(r.peak - 1.0 / kPi) < 1e-6, "peak-1/pi=" + num(r.peak - 1.0 / kPi) + " within 1e-6");
  return o;
}

Outcome c2_square_oracle() {
  Outcome o;
  const auto r = square_closed_form(kCtx);
  o.require(r.max_error < 1e-3, "Linf=" + num(r.max_error) + " < 1e-3");
  o.require(r.max_outside == 0.0, "max|W| outside support=" + num(r.max_outside));
  return o;
}

Outcome c3_marginals() {
  Outcome o;
  for (auto st : kCatalog) {
    const auto m = marginal_errors(st, kGridN, kCtx);
    o.require(m.q < 1e-6 && m.p < 1e-6,
              fmt::format("{} q={} p={}", to_string(st), num(m.q), num(m.p)));
  }
  return o;
}

Outcome c4_free_flow() {
  Outcome o;
  for (auto st : kCatalog) {
    const double e = free_flow_error(st, kGridN, kCtx);
    o.require(e < 1e-3, fmt::format("{} Linf={}", to_string(st), num(e)));
  }
  return o;
}

Outcome c5_spreading() {
  Outcome o;
  const double e = spreading_error(kGridN, kCtx);
  o.require(e < 1e-3, "max rel err=" + num(e) + " < 1e-3 over 81 t");
  return o;
}

Outcome c6_hermite_gauss() {
  Outcome o;
  const auto r = hg_width_law(kCtx);
  const double target = kCtx.mass * catalog::kHermiteOmega;
  o.require(r.max_rel_error < 1e-2, "width rel err=" + num(r.max_rel_error) + " < 1e-2");
  o.require(std::abs(r.energy_ratio - target) <= 0.01 * target, "sigma_p/sigma_q=" + num(r.energy_ratio));
  return o;
}

Outcome c7_negative_flow() {
  Outcome o;
  const auto r = negative_flow(kGridN, kCtx);
  o.require(std::abs(r.argmin + 4.0) <= 0.05, "argmin=" + num(r.argmin) + " vs -4 +- 0.05");
  o.require(std::abs(r.argmin - r.t_extremum) <= 0.05, "t_extremum=" + num(r.t_extremum));
  o.require(r.before == Monotonicity::Decreasing, std::string("before: ") + to_string(r.before));
  o.require(r.after == Monotonicity::Increasing, std::string("after: ") + to_string(r.after));
  return o;
}

Outcome c8_antisymmetry() {
  Outcome o;
  for (const auto& r : antisymmetry(kGridN, kCtx)) {
    o.require(r.max_error <= 1e-6 && r.verdict == Monotonicity::NonMonotonic,
              fmt::format("{} err={} {}", r.state, num(r.max_error), to_string(r.verdict)));
  }
  return o;
}

Outcome c9_asymptotic() {
  Outcome o;
  const auto l1 = square_asymptotic_l1(kCtx);
  bool decreasing = true;
  for (std::size_t j = 1; j < l1.size(); ++j) decreasing = decreasing && l1[j] < l1[j - 1];
  o.require(decreasing, fmt::format("square L1 {} {} {} {} decreasing", num(l1[0]), num(l1[1]), num(l1[2]),
                                    num(l1[3])));
  o.require(l1.back() < 0.02, "square L1(40)=" + num(l1.back()) + " < 0.02");
  const double sinc = sinc_asymptotic_l1(kSincAsymptoticB, kCtx);
  o.require(sinc < 0.05, fmt::format("sinc b={} L1(40)={} < 0.05", kSincAsymptoticB, num(sinc)));
  o.detail += fmt::format("; sinc b=1 L1(40)={} (informational)", num(sinc_asymptotic_l1(1.0, kCtx)));
  return o;
}

Outcome c10_stationarity() {
  Outcome o;
  for (double wt : {kPi / 4.0, kPi / 2.0, kPi}) {
    const double e = stationarity_error(wt, kGridN + 1, kCtx);
    o.require(e < 1e-3, fmt::format("wt={:.4f} Linf={}", wt, num(e)));
  }
  return o;
}

Outcome c11_target_profile() {
  Outcome o;
  const double l1 = target_profile_l1(kCtx);
  o.require(l1 < 0.05, "L1(40)=" + num(l1) + " < 0.05");
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome c12_determinism() {
  Outcome o;
  const auto base = fs::temp_directory_path() / "wigflow_acceptance";
  fs::remove_all(base);
  std::vector<fs::path> dirs = {base / "a", base / "b"};
  for (const auto& d : dirs) {
    const auto cmd = fmt::format("\"{}\" figure 5 --out \"{}\" > /dev/null", WIGFLOW_BIN, d.string());
    const int rc = std::system(cmd.c_str());
    o.require(rc == 0, fmt::format("run exit={}", rc));
  }
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(dirs[0])) {
    if (entry.path().extension() != ".csv") continue;
    const auto name = entry.path().filename();
    o.require(slurp(entry.path()) == slurp(dirs[1] / name), name.string() + " identical");
    ++compared;
  }
  o.require(compared > 0, fmt::format("{} csv files", compared));
  fs::remove_all(base);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1 wigner transform gaussian oracle", c1_gaussian_oracle},
      {"C2 square wave oracle", c2_square_oracle},
      {"C3 marginal identities", c3_marginals},
      {"C4 free flow equivalence", c4_free_flow},
      {"C5 spreading law", c5_spreading},
      {"C6 hermite-gauss width law", c6_hermite_gauss},
      {"C7 negative probability flow", c7_negative_flow},
      {"C8 half-plane antisymmetry", c8_antisymmetry},
      {"C9 asymptotic dispersion", c9_asymptotic},
      {"C10 harmonic stationarity", c10_stationarity},
      {"C11 target profile construction", c11_target_profile},
      {"C12 figure determinism", c12_determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    fmt::print("{} {} ({:.1f} s): {}\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail);
    std::fflush(stdout);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
