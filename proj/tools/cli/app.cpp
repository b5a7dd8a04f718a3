#include <cstdio>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"

namespace wigflow::cli {

namespace {

int run_verify(const std::string& suite, const RunConfig& cfg) {
  const auto report = cmd_verify(suite, cfg);
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    if (!c.pass) ++failed;
    fmt::print("{} {} actual={:.6g} expected={:.6g} ({} {:.3g})\n", c.pass ? "PASS" : "FAIL", c.check, c.actual,
               c.expected, c.relation, c.tolerance);
  }
  fmt::print("{} of {} checks passed; report in {}\n", report.checks.size() - failed, report.checks.size(),
             (cfg.output_dir / fmt::format("verify_{}.json", suite)).string());
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Wigner-function phase-space flows: figure data, verification suites and sweeps", "wigflow"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::optional<std::string> out;
  app.add_option("--grid-n", cfg.grid_n, "q grid size, a power of two >= 128")->capture_default_str();
  app.add_option("--q-span", cfg.q_span, "full width of the q grid")->capture_default_str();
  app.add_option("--hbar", cfg.hbar, "reduced Planck constant")->capture_default_str();
  app.add_option("--mass", cfg.mass, "particle mass")->capture_default_str();
  app.add_option("--out", out, fmt::format("output directory (default ${} or {})", kOutDirEnv, kDefaultOutDir));
  app.add_flag("--png", cfg.emit_png, "also write PNG frames");

  int figure_id = 0;
  auto* figure = app.add_subcommand("figure", "write the data behind one figure (1..6)");
  figure->add_option("id", figure_id, "figure number")->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite: all, wigner, flows or analysis");
  verify->add_option("suite", suite, "suite name")->required();

  std::string quantity, params, t_range;
  auto* sweep = app.add_subcommand("sweep", "tabulate width or prob_right against t");
  sweep->add_option("quantity", quantity, "width or prob_right")->required();
  sweep->add_option("--params", params, "comma-separated key=value list");
  sweep->add_option("--t-range", t_range, "min,max,steps (write --t-range=-4,4,81 for a negative min)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.output_dir = resolve_output_dir(out);
    cfg.validate();
    if (figure->parsed() && (figure_id < 1 || figure_id > 6)) {
      throw UsageError(fmt::format("unknown figure {}; expected 1..6", figure_id));
    }
    if (verify->parsed() && suite != "all" && suite != "wigner" && suite != "flows" && suite != "analysis") {
      throw UsageError(fmt::format("unknown suite '{}'; expected all, wigner, flows or analysis", suite));
    }
    ensure_output_dir(cfg.output_dir);
    if (figure->parsed()) {
      for (const auto& f : cmd_figure(figure_id, cfg)) fmt::print("{}\n", (cfg.output_dir / f).string());
      return kExitOk;
    }
    if (verify->parsed()) return run_verify(suite, cfg);
    const auto file = cmd_sweep(quantity, params, t_range, cfg);
    fmt::print("{}\n", (cfg.output_dir / file).string());
    return kExitOk;
  } catch (const UsageError& e) {
    fmt::print(stderr, "usage error: {}\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    fmt::print(stderr, "i/o error: {}\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitRuntime;
  }
}

}  // namespace wigflow::cli
