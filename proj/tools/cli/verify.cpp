#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "commands.hpp"
#include "output.hpp"
#include "scenarios.hpp"
#include "wigflow/flows.hpp"
#include "wigflow/wigner.hpp"

namespace wigflow::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class Checks {
 public:
  Checks(std::vector<CheckResult>& out, double scale) : out_(out), scale_(scale) {}

  double scale() const { return scale_; }

  void near(std::string name, double expected, double actual, double tol) {
    out_.push_back({std::move(name), expected, actual, tol, "abs", std::abs(actual - expected) <= tol});
  }
  void at_most(std::string name, double actual, double bound) {
    out_.push_back({std::move(name), bound, actual, 0.0, "<=", actual <= bound});
  }
  void at_least(std::string name, double actual, double bound) {
    out_.push_back({std::move(name), bound, actual, 0.0, ">=", actual >= bound});
  }

 private:
  std::vector<CheckResult>& out_;
  double scale_;
};

void wigner_suite(Checks& c, const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const double s = c.scale();
  const auto g = gaussian_closed_form(cfg.grid_n, ctx);
  c.at_most("gaussian_closed_form_max_error", g.max_error, 1e-6 * s);
  c.near("gaussian_peak", 1.0 / (kPi * ctx.hbar), g.peak, 1e-6 * s);

  const auto sq = square_closed_form(ctx);
  c.at_most("square_wave_closed_form_max_error", sq.max_error, 1e-3);
  c.at_most("square_wave_zero_outside_support", sq.max_outside, 1e-12);
  c.at_most("square_wave_min_value", sq.min_value, -0.01);

  for (auto st : kCatalog) {
    const auto m = marginal_errors(st, cfg.grid_n, ctx);
    const std::string name = to_string(st);
    c.at_most("marginal_q_" + name, m.q, 1e-6 * s);
    c.at_most("marginal_p_" + name, m.p, 1e-6 * s);
    c.at_most("total_" + name, m.total, 1e-6 * s);
  }

  const auto qg = make_grid(-0.5 * cfg.q_span, 0.5 * cfg.q_span, cfg.grid_n);
  const auto pg = wigner_pgrid(qg, ctx.hbar);
  const GaussianParams left{-10.0, 0.0, 1.0}, right{10.0, 0.0, 1.0};
  const std::array<WignerField, 2> parts = {wigner_transform(gaussian_wavefunction(left, qg, ctx), pg),
                                            wigner_transform(gaussian_wavefunction(right, qg, ctx), pg)};
  const std::array<double, 2> weights = {0.5, 0.5};
  c.near("purity_pure_gaussian", 1.0, purity(parts[0]), 1e-4 * s);
  c.near("purity_separated_mixture", 0.5, purity(mix(parts, weights)), 1e-3 * s);
}

void flows_suite(Checks& c, const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const double s = c.scale();
  for (auto st : kCatalog) {
    const bool fixed = st == CatalogState::SquareWave || st == CatalogState::Sinc;
    c.at_most(fmt::format("free_flow_vs_schrodinger_{}", to_string(st)), free_flow_error(st, cfg.grid_n, ctx),
              1e-3 * (fixed ? 1.0 : s));
  }
  for (double wt : {kPi / 4.0, kPi / 2.0, kPi}) {
    c.at_most(fmt::format("harmonic_stationarity_wt_{:.4f}", wt), stationarity_error(wt, cfg.grid_n + 1, ctx),
              1e-3 * s);
  }

  const auto g = catalog::kGaussian;
  const auto qg = catalog_qgrid(CatalogState::Gaussian, cfg.grid_n, ctx);
  const auto w0 = wigner_transform(gaussian_wavefunction(g, qg, ctx), wigner_pgrid(qg, ctx.hbar));
  const auto sheared = apply_flow(w0, flow_for(Free{ctx.mass}, 2.0));
  const auto p0 = marginal_p(w0), p2 = marginal_p(sheared);
  double drift = 0.0;
  for (std::size_t k = 0; k < p0.size(); ++k) drift = std::max(drift, std::abs(p2[k] - p0[k]));
  c.at_most("free_flow_preserves_p_marginal", drift, 1e-6 * s);
  c.near("free_flow_preserves_total", 1.0, sheared.total(), 1e-4 * s);

  const ConstantForce force{ctx.mass, 0.5};
  const double t = 2.0;
  const double expected_mean = g.q0 + g.p0 * t / ctx.mass + 0.5 * force.force * t * t / ctx.mass;
  c.near("constant_force_mean_position", expected_mean, marginal_q(apply_flow(w0, flow_for(force, t))).mean(),
         1e-3 * s);

  const auto rotated = apply_flow(w0, flow_for(Harmonic{ctx.mass, 1.0}, 0.7));
  c.near("harmonic_preserves_total", 1.0, rotated.total(), 1e-3 * s);

  double gap = 0.0;
  const auto lhs = compose(flow_for(Harmonic{ctx.mass, 1.0}, 0.3), flow_for(Harmonic{ctx.mass, 1.0}, 0.4));
  const auto rhs = flow_for(Harmonic{ctx.mass, 1.0}, 0.7);
  for (std::size_t k = 0; k < 4; ++k) gap = std::max(gap, std::abs(lhs.matrix[k] - rhs.matrix[k]));
  c.at_most("harmonic_flow_group_property", gap, 1e-12);
}

void analysis_suite(Checks& c, const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const double s = c.scale();
  for (const auto& r : antisymmetry(cfg.grid_n, ctx)) {
    c.at_most("half_plane_antisymmetry_" + r.state, r.max_error, 1e-6);
    c.near("non_monotonic_" + r.state, 1.0, r.verdict == Monotonicity::NonMonotonic ? 1.0 : 0.0, 0.0);
  }

  const auto nf = negative_flow(cfg.grid_n, ctx);
  c.near("prob_right_argmin", nf.t_extremum, nf.argmin, 0.05);
  c.near("prob_right_decreasing_before_min", 1.0, nf.before == Monotonicity::Decreasing ? 1.0 : 0.0, 0.0);
  c.near("prob_right_increasing_after_min", 1.0, nf.after == Monotonicity::Increasing ? 1.0 : 0.0, 0.0);
  c.at_most("prob_right_half_plane_vs_direct", nf.max_direct_gap, 1e-3 * s);

  c.at_most("gaussian_spreading_law_rel_error", spreading_error(cfg.grid_n, ctx), 1e-3 * s);
  const auto hg = hg_width_law(ctx);
  c.at_most("hermite_gauss_width_law_rel_error", hg.max_rel_error, 1e-2);
  c.near("hermite_gauss_energy_ratio", ctx.mass * catalog::kHermiteOmega, hg.energy_ratio,
         0.01 * ctx.mass * catalog::kHermiteOmega);

  const auto l1 = square_asymptotic_l1(ctx);
  for (std::size_t j = 1; j < l1.size(); ++j) {
    c.at_most(fmt::format("square_wave_asymptotic_l1_t{}", kAsymptoticTimes[j]), l1[j], l1[j - 1]);
  }
  c.at_most("square_wave_asymptotic_l1_t40_bound", l1.back(), 0.02);
  c.at_most(fmt::format("sinc_asymptotic_l1_b{}", kSincAsymptoticB), sinc_asymptotic_l1(kSincAsymptoticB, ctx),
            0.05);
  c.at_most("target_profile_l1_t40", target_profile_l1(ctx), 0.05);
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::ordered_json VerifyReport::to_json(const RunConfig& cfg) const {
  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  doc["suite"] = suite;
  doc["hbar"] = cfg.hbar;
  doc["mass"] = cfg.mass;
  doc["grid"] = {{"n", cfg.grid_n}, {"q_span", cfg.q_span}};
  doc["tolerance_scale"] = cfg.tolerance_scale();
  std::size_t failed = 0;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    doc["checks"].push_back({{"check", c.check},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"tolerance", c.tolerance},
                             {"relation", c.relation},
                             {"pass", c.pass}});
    if (!c.pass) ++failed;
  }
  doc["passed"] = checks.size() - failed;
  doc["failed"] = failed;
  return doc;
}

VerifyReport cmd_verify(const std::string& suite, const RunConfig& cfg) {
  const bool all = suite == "all";
  if (!all && suite != "wigner" && suite != "flows" && suite != "analysis") {
    throw UsageError(fmt::format("unknown suite '{}'; expected all, wigner, flows or analysis", suite));
  }
  VerifyReport report{suite, {}};
  Checks checks(report.checks, cfg.tolerance_scale());
  if (all || suite == "wigner") wigner_suite(checks, cfg);
  if (all || suite == "flows") flows_suite(checks, cfg);
  if (all || suite == "analysis") analysis_suite(checks, cfg);
  write_json(cfg.output_dir / fmt::format("verify_{}.json", suite), report.to_json(cfg));
  return report;
}

}  // namespace wigflow::cli
