#include <charconv>
#include <cmath>
#include <map>
#include <numbers>

#include <fmt/format.h>

#include "commands.hpp"
#include "output.hpp"
#include "wigflow/analysis.hpp"
#include "wigflow/catalog.hpp"
#include "wigflow/flows.hpp"
#include "wigflow/wigner.hpp"

namespace wigflow::cli {

namespace {

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw UsageError(fmt::format("malformed {} '{}'", what, text));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

using Params = std::map<std::string, double, std::less<>>;

Params parse_params(std::string_view text, std::initializer_list<std::pair<const char*, double>> defaults) {
  Params out;
  for (const auto& [k, v] : defaults) out[k] = v;
  if (text.empty()) return out;
  for (auto item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError(fmt::format("malformed parameter '{}'; expected key=value", item));
    const auto key = item.substr(0, eq);
    auto it = out.find(key);
    if (it == out.end()) throw UsageError(fmt::format("unknown parameter '{}'", key));
    it->second = parse_number(item.substr(eq + 1), "parameter value");
  }
  return out;
}

struct TimeRange {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 0;

  double at(std::size_t k) const { return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1); }
};

TimeRange parse_time_range(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError(fmt::format("malformed t range '{}'; expected min,max,steps", text));
  TimeRange r{parse_number(parts[0], "t min"), parse_number(parts[1], "t max"), 0};
  const double steps = parse_number(parts[2], "step count");
  if (steps < 2.0 || steps != std::floor(steps)) throw UsageError("t range needs an integer step count >= 2");
  if (!(r.hi > r.lo)) throw UsageError("t range needs max > min");
  r.steps = static_cast<std::size_t>(steps);
  return r;
}

GaussianParams gaussian_from(const Params& p) {
  const GaussianParams g{p.at("q0"), p.at("p0"), p.at("sigma_q")};
  if (!(g.sigma_q > 0.0)) throw UsageError("sigma_q must be positive");
  return g;
}

Grid1D sweep_qgrid(const RunConfig& cfg) { return make_grid(-0.5 * cfg.q_span, 0.5 * cfg.q_span, cfg.grid_n); }

// Params: sigma_q, q0, p0 for a Gaussian, or hermite=n with omega for an
// oscillator eigenstate measured by its half-IQR.
void width_sweep(const Params& p, const TimeRange& tr, const RunConfig& cfg, Manifest& manifest) {
  const auto ctx = cfg.ctx();
  const auto qg = sweep_qgrid(cfg);
  const auto fpg = free_evolution_pgrid(qg, ctx.hbar, 2);
  const std::string name = "sweep_width.csv";
  CsvWriter csv(cfg.output_dir / name, {"t", "analytic", "measured", "rel_diff"});
  manifest.add_file(name);
  const double order = p.at("hermite");
  if (order >= 0.0) {
    if (order != std::floor(order)) throw UsageError("hermite must be a nonnegative integer");
    const double omega = p.at("omega");
    const auto psi = hermite_gauss(static_cast<int>(order), omega, qg, ctx);
    const double h0 = half_iqr(psi.density());
    manifest.params()["measure"] = "half_iqr";
    for (std::size_t k = 0; k < tr.steps; ++k) {
      const double t = tr.at(k);
      const double law = width_law_hg(h0, omega, t);
      const double measured = half_iqr(evolve_free_exact(psi, t, fpg).density());
      csv.row({t, law, measured, measured / law - 1.0});
    }
    return;
  }
  const auto g = gaussian_from(p);
  const auto psi = gaussian_wavefunction(g, qg, ctx);
  manifest.params()["measure"] = "stddev";
  for (std::size_t k = 0; k < tr.steps; ++k) {
    const double t = tr.at(k);
    const double law = gaussian_width(g, ctx.mass, t, ctx);
    const double measured = evolve_free_exact(psi, t, fpg).density().stddev();
    csv.row({t, law, measured, measured / law - 1.0});
  }
}

void prob_right_sweep(const Params& p, const TimeRange& tr, const RunConfig& cfg, Manifest& manifest) {
  const auto ctx = cfg.ctx();
  const auto g = gaussian_from(p);
  const double q1 = p.at("q1");
  const auto qg = sweep_qgrid(cfg);
  const auto w0 = wigner_transform(gaussian_wavefunction(g, qg, ctx),
                                   wigner_pgrid(qg, ctx.hbar, cfg.grid_n + 1, std::abs(g.p0) + 8.0 * g.sigma_p(ctx)));
  const std::string name = "sweep_prob_right.csv";
  CsvWriter csv(cfg.output_dir / name, {"t", "analytic", "measured", "direct"});
  manifest.add_file(name);
  for (std::size_t k = 0; k < tr.steps; ++k) {
    const double t = tr.at(k);
    const double mean = g.q0 + g.p0 * t / ctx.mass;
    const double sd = gaussian_width(g, ctx.mass, t, ctx);
    const double analytic = 0.5 * std::erfc((q1 - mean) / (sd * std::numbers::sqrt2));
    csv.row({t, analytic, prob_right_of(w0, q1, t, ctx.mass), prob_right_of_direct(w0, q1, t, ctx.mass)});
  }
  const auto prob = [&](double t) { return prob_right_of(w0, q1, t, ctx.mass); };
  manifest.params()["t_argmin"] = locate_minimum(prob, tr.lo, tr.hi, tr.steps);
  if (g.q0 != q1) manifest.params()["t_extremum"] = extremum_time(g, q1, ctx.mass, ctx);
}

}  // namespace

std::string cmd_sweep(const std::string& quantity, const std::string& params, const std::string& t_range,
                      const RunConfig& cfg) {
  if (quantity != "width" && quantity != "prob_right") {
    throw UsageError(fmt::format("unknown sweep quantity '{}'; expected width or prob_right", quantity));
  }
  const auto tr = parse_time_range(t_range);
  Manifest manifest("sweep " + quantity, cfg);
  manifest.params()["t_range"] = {tr.lo, tr.hi, tr.steps};
  if (quantity == "width") {
    const auto p = parse_params(params, {{"sigma_q", 1.0}, {"q0", 0.0}, {"p0", 0.0}, {"hermite", -1.0}, {"omega", 1.0}});
    for (const auto& [k, v] : p) manifest.params()[k] = v;
    width_sweep(p, tr, cfg, manifest);
  } else {
    const auto g = catalog::kGaussian;
    const auto p = parse_params(params, {{"sigma_q", g.sigma_q}, {"q0", g.q0}, {"p0", g.p0}, {"q1", 0.0}});
    for (const auto& [k, v] : p) manifest.params()[k] = v;
    prob_right_sweep(p, tr, cfg, manifest);
  }
  manifest.add_file("manifest.json");
  manifest.write(cfg.output_dir);
  return "sweep_" + quantity + ".csv";
}

}  // namespace wigflow::cli
