#include "scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wigflow/flows.hpp"
#include "wigflow/wigner.hpp"

namespace wigflow::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  return v;
}

double max_gap(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Grid1D state_grid(CatalogState s, std::size_t n, const PhysContext& ctx) {
  if (s == CatalogState::SquareWave) return catalog_qgrid(s, kSquareGridN, ctx);
  if (s == CatalogState::Sinc) return catalog_qgrid(s, kSincMarginalN, ctx);
  return catalog_qgrid(s, n, ctx);
}

WignerField full_band(const Wavefunction& psi) { return wigner_transform(psi, wigner_pgrid(psi.grid, psi.ctx.hbar)); }

// The square wave is resampled to half spacing first so that its whole
// sample band fits inside the Wigner p band; even rows of the fine grid are
// the nodes of the coarse one.
double square_free_flow_error(const PhysContext& ctx) {
  const auto qg = square_wave_grid(catalog::kSquareWidth, kSquareGridN, 20);
  const auto psi = square_wave(catalog::kSquareWidth, qg, ctx);
  const auto w = full_band(resample_band_limited(psi, 2));
  const auto fpg = free_evolution_pgrid(qg, ctx.hbar, 8);
  double err = 0.0;
  for (double t : kFlowTimes) {
    const auto mq = marginal_q_values(apply_flow(w, flow_for(Free{ctx.mass}, t)));
    const auto d = evolve_free_exact(psi, t, fpg).density();
    for (std::size_t i = 0; i < d.size(); ++i) err = std::max(err, std::abs(mq[2 * i] - d[i]));
  }
  return err;
}

// The sinc needs a long grid for its tails; only a window of rows around the
// origin is transformed, on a p grid whose transform length matches the grid.
double sinc_free_flow_error(const PhysContext& ctx) {
  const auto qg = catalog_qgrid(CatalogState::Sinc, kSincFlowN, ctx);
  const auto psi = make_catalog_state(CatalogState::Sinc, qg, ctx);
  const double dq = qg.spacing();
  const double unit = ctx.hbar / catalog::kSincWidth;
  const auto rows = centered_grid(0.0, dq, 2 * static_cast<std::size_t>(60.0 * unit / dq) + 1);
  const double p_half = 0.7 * catalog::kSincWidth;
  const auto n_p = 2 * static_cast<std::size_t>(p_half * static_cast<double>(kSincFlowN) / (kPi * ctx.hbar) * dq) + 1;
  const auto w = wigner_transform(psi, rows, wigner_pgrid(qg, ctx.hbar, n_p, p_half));
  const auto fpg = free_evolution_pgrid(qg, ctx.hbar, 2);
  const auto offset = static_cast<std::size_t>(std::lround(qg.index_of(rows.min())));
  double err = 0.0;
  for (double t : kFlowTimes) {
    const auto mq = marginal_q_values(apply_flow(w, flow_for(Free{ctx.mass}, t)));
    const auto d = evolve_free_exact(psi, t, fpg).density();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (std::abs(rows[i]) <= 55.0 * unit) err = std::max(err, std::abs(mq[i] - d[i + offset]));
    }
  }
  return err;
}

}  // namespace

ClosedFormResult gaussian_closed_form(std::size_t n, const PhysContext& ctx) {
  const GaussianParams g{0.0, 0.0, 1.0};
  const auto qg = centered_grid(0.0, 40.0 / static_cast<double>(n), n + 1);
  const auto w = full_band(gaussian_wavefunction(g, qg, ctx));
  const auto exact = sample(gaussian_wigner(g, ctx), w.qgrid(), w.pgrid());
  ClosedFormResult r;
  r.max_error = max_gap(w.field.values(), exact.values());
  r.peak = *std::max_element(w.field.values().begin(), w.field.values().end());
  return r;
}

SquareOracleResult square_closed_form(const PhysContext& ctx) {
  const double a = catalog::kSquareWidth;
  const auto qg = catalog_qgrid(CatalogState::SquareWave, kSquareGridN, ctx);
  const auto w = full_band(square_wave(a, qg, ctx));
  const auto exact = sample(square_wave_wigner(a, ctx), w.qgrid(), w.pgrid());
  SquareOracleResult r;
  r.max_error = max_gap(w.field.values(), exact.values());
  for (std::size_t i = 0; i < qg.size(); ++i) {
    if (std::abs(qg[i]) <= 0.5 * a) continue;
    for (double v : w.field.row(i)) r.max_outside = std::max(r.max_outside, std::abs(v));
  }
  r.min_value = w.min_value();
  return r;
}

MarginalErrors marginal_errors(CatalogState s, std::size_t n, const PhysContext& ctx) {
  const auto qg = state_grid(s, n, ctx);
  const auto psi = make_catalog_state(s, qg, ctx);
  const auto w = full_band(psi);
  MarginalErrors r;
  r.q = max_gap(marginal_q_values(w), psi.density().values());
  r.p = max_gap(marginal_p(w).values(), momentum_representation(psi, w.pgrid()).density().values());
  r.total = std::abs(w.total() - 1.0);
  return r;
}

double free_flow_error(CatalogState s, std::size_t n, const PhysContext& ctx) {
  if (s == CatalogState::SquareWave) return square_free_flow_error(ctx);
  if (s == CatalogState::Sinc) return sinc_free_flow_error(ctx);
  const auto qg = catalog_qgrid(s, n, ctx);
  const auto psi = make_catalog_state(s, qg, ctx);
  const auto w = full_band(psi);
  const auto fpg = free_evolution_pgrid(qg, ctx.hbar, 2);
  double err = 0.0;
  for (double t : kFlowTimes) {
    const auto mq = marginal_q_values(apply_flow(w, flow_for(Free{ctx.mass}, t)));
    err = std::max(err, max_gap(mq, evolve_free_exact(psi, t, fpg).density().values()));
  }
  return err;
}

double spreading_error(std::size_t n, const PhysContext& ctx) {
  const GaussianParams g{0.0, 0.0, 1.0};
  const auto qg = make_grid(-20.0, 20.0, n);
  const auto psi = gaussian_wavefunction(g, qg, ctx);
  const auto fpg = free_evolution_pgrid(qg, ctx.hbar, 2);
  double err = 0.0;
  for (double t : linspace(-4.0, 4.0, 81)) {
    const double law = gaussian_width(g, ctx.mass, t, ctx);
    err = std::max(err, std::abs(evolve_free_exact(psi, t, fpg).density().stddev() / law - 1.0));
  }
  return err;
}

HgWidthResult hg_width_law(const PhysContext& ctx) {
  const double omega = catalog::kHermiteOmega;
  const double length = std::sqrt(ctx.hbar / (ctx.mass * omega));
  const auto qg = make_grid(-40.0 * length, 40.0 * length, 2048);
  const auto psi = hermite_gauss(catalog::kHermiteOrder, omega, qg, ctx);
  const auto fpg = free_evolution_pgrid(qg, ctx.hbar, 2);
  const double h0 = half_iqr(psi.density());
  HgWidthResult r;
  for (double t : {0.0, 1.0, 2.0, 4.0}) {
    const double law = width_law_hg(h0, omega, t);
    r.max_rel_error = std::max(r.max_rel_error, std::abs(half_iqr(evolve_free_exact(psi, t, fpg).density()) / law - 1.0));
  }
  r.energy_ratio = hg_energy_ratio(catalog::kHermiteOrder, omega, ctx.mass, ctx);
  return r;
}

NegativeFlowResult negative_flow(std::size_t n, const PhysContext& ctx) {
  const auto g = catalog::kGaussian;
  const double q1 = 0.0;
  const auto qg = make_grid(-12.0, 12.0, n);
  const auto w0 = wigner_transform(gaussian_wavefunction(g, qg, ctx), wigner_pgrid(qg, ctx.hbar, n + 1, 6.0));
  const auto prob = [&](double t) { return prob_right_of(w0, q1, t, ctx.mass); };

  NegativeFlowResult r;
  r.t_extremum = extremum_time(g, q1, ctx.mass, ctx);
  r.argmin = locate_minimum(prob, -10.0, 10.0, 201);
  std::vector<double> before, after;
  for (double t : linspace(-10.0, r.argmin - 0.05, 60)) before.push_back(prob(t));
  for (double t : linspace(r.argmin + 0.05, 10.0, 60)) after.push_back(prob(t));
  r.before = monotonicity_verdict(before);
  r.after = monotonicity_verdict(after);
  // The evolved packet must stay on the grid for the direct form.
  for (double t : linspace(-3.0, 3.0, 25)) {
    r.max_direct_gap = std::max(r.max_direct_gap, std::abs(prob(t) - prob_right_of_direct(w0, q1, t, ctx.mass)));
  }
  return r;
}

std::vector<AntisymmetryResult> antisymmetry(std::size_t n, const PhysContext& ctx) {
  struct Case {
    std::string name;
    WignerField w;
    double q1;
  };
  std::vector<Case> cases;
  for (auto s : kCatalog) {
    const auto qg = state_grid(s, n, ctx);
    const auto psi = make_catalog_state(s, qg, ctx);
    // Off-center test line: shifted from the mean position.
    const double q1 = psi.density().mean() + (s == CatalogState::SquareWave ? 0.3 : 1.0);
    cases.push_back({to_string(s), full_band(psi), q1});
  }
  {
    const auto qg = make_grid(-20.0, 20.0, n);
    const std::array<WignerField, 2> parts = {
        full_band(gaussian_wavefunction(catalog::kGaussian, qg, ctx)),
        full_band(hermite_gauss(catalog::kHermiteOrder, catalog::kHermiteOmega, qg, ctx))};
    const std::array<double, 2> weights = {0.5, 0.5};
    cases.push_back({"mixture", mix(parts, weights), 1.0});
  }

  std::vector<AntisymmetryResult> out;
  for (const auto& c : cases) {
    AntisymmetryResult r;
    r.state = c.name;
    for (int k = 0; k < 16; ++k) {
      const double theta = 2.0 * kPi * (k + 0.25) / 16.0;
      const double f = half_plane_prob(c.w, {c.q1, theta});
      const double g = half_plane_prob(c.w, {c.q1, theta + kPi});
      r.max_error = std::max(r.max_error, std::abs(f + g - 1.0));
    }
    std::vector<double> curve;
    for (double t : linspace(-8.0, 8.0, 17)) curve.push_back(prob_right_of(c.w, c.q1, t, ctx.mass));
    r.verdict = monotonicity_verdict(curve);
    out.push_back(std::move(r));
  }
  return out;
}

std::array<double, 4> square_asymptotic_l1(const PhysContext& ctx) {
  const double a = catalog::kSquareWidth;
  const auto w0 = square_wave_wigner(a, ctx);
  const auto ug = make_grid(-100.0, 100.0, 10001);
  std::array<double, 4> out{};
  for (std::size_t j = 0; j < kAsymptoticTimes.size(); ++j) {
    const double t = kAsymptoticTimes[j];
    // In u = a m q / (hbar t) the limit shape is f(u) with unit mass.
    const double q_per_u = ctx.hbar * t / (a * ctx.mass);
    std::vector<double> gap(ug.size());
    for (std::size_t i = 0; i < ug.size(); ++i) {
      const double rho = sheared_line_marginal(w0, SupportAxis::Q, -0.5 * a, 0.5 * a, ug[i] * q_per_u, t, ctx.mass, 512);
      gap[i] = std::abs(rho * q_per_u - shape_f(ug[i]));
    }
    out[j] = integrate(gap, ug);
  }
  return out;
}

double sinc_asymptotic_l1(double b, const PhysContext& ctx) {
  const double t = 40.0;
  const double edge = 0.5 * b * t / ctx.mass;
  const double height = 1.0 / (2.0 * edge);
  const auto qg = make_grid(-1.5 * edge, 1.5 * edge, 2001);
  const auto phi = [b](double) { return cplx(1.0 / std::sqrt(b), 0.0); };
  std::vector<double> rho(qg.size()), gap(qg.size());
  for (std::size_t i = 0; i < qg.size(); ++i) {
    rho[i] = std::norm(free_amplitude(phi, -0.5 * b, 0.5 * b, qg[i], t, ctx));
    gap[i] = std::abs(rho[i] - (std::abs(qg[i]) <= edge ? height : 0.0));
  }
  // Mass outside the window counts in full.
  return integrate(gap, qg) + std::max(0.0, 1.0 - integrate(rho, qg));
}

double stationarity_error(double omega_t, std::size_t n, const PhysContext& ctx) {
  const double omega = catalog::kHermiteOmega;
  const double length = std::sqrt(ctx.hbar / (ctx.mass * omega));
  const auto qg = centered_grid(0.0, 14.0 * length / static_cast<double>(n - 1), n);
  const auto pg = wigner_pgrid(qg, ctx.hbar, n, 7.0 * ctx.hbar / length);
  const auto flow = flow_for(Harmonic{ctx.mass, omega}, omega_t / omega);
  double err = 0.0;
  for (int k = 0; k <= 3; ++k) {
    const auto w = wigner_transform(hermite_gauss(k, omega, qg, ctx), pg);
    err = std::max(err, max_gap(apply_flow(w, flow).field.values(), w.field.values()));
  }
  return err;
}

double target_profile_l1(const PhysContext& ctx) {
  const double t = 40.0;
  const auto qg = make_grid(-200.0 * ctx.hbar, 200.0 * ctx.hbar, 2048);
  const auto psi = make_catalog_state(CatalogState::Bimodal, qg, ctx);
  const auto rho = evolve_free_exact(psi, t, free_evolution_pgrid(qg, ctx.hbar, 4)).density();
  const auto profile = asymptotic_profile(bimodal_target(bimodal_target_grid()), ctx.mass, t);
  std::vector<double> gap(qg.size());
  for (std::size_t i = 0; i < qg.size(); ++i) gap[i] = std::abs(rho[i] - profile.at(qg[i]));
  return integrate(gap, qg);
}

}  // namespace wigflow::cli
