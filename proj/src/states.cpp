#include "wigflow/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wigflow/errors.hpp"
#include "wigflow/fourier.hpp"
#include "wigflow/quadrature.hpp"
#include "wigflow/wigner.hpp"

namespace wigflow {

namespace {

constexpr double kPi = std::numbers::pi;

double norm_of(const std::vector<cplx>& amps, const Grid1D& grid) {
  std::vector<double> d(amps.size());
  std::transform(amps.begin(), amps.end(), d.begin(), [](cplx a) { return std::norm(a); });
  return integrate(d, grid);
}

Density1D density_of(const std::vector<cplx>& amps, const Grid1D& grid) {
  std::vector<double> d(amps.size());
  std::transform(amps.begin(), amps.end(), d.begin(), [](cplx a) { return std::norm(a); });
  return Density1D(grid, std::move(d));
}

void renormalize(std::vector<cplx>& amps, const Grid1D& grid) {
  const double n = norm_of(amps, grid);
  if (!(n > 0.0)) throw NormalizationError("state has zero norm on the grid");
  const double scale = 1.0 / std::sqrt(n);
  for (auto& a : amps) a *= scale;
}

void check_tail(double inside_mass, double tol, const char* what) {
  const double tail = 1.0 - inside_mass;
  if (tail > tol) {
    throw TailMassError(std::string(what) + ": probability outside the grid is " + std::to_string(tail) +
                        " (limit " + std::to_string(tol) + ")");
  }
}

std::size_t panels_for(double span, double scale) {
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(span / scale)), 16, 1u << 20);
}

// Orthonormal Hermite functions phi_n(xi) = (2^n n! sqrt(pi))^{-1/2} H_n(xi) e^{-xi^2/2},
// by the three-term recurrence, which avoids overflow of H_n and n!.
double hermite_function(int n, double xi) {
  double prev = 0.0;
  double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * xi * xi);
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * xi * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double Wavefunction::norm() const { return norm_of(amps, grid); }
Density1D Wavefunction::density() const { return density_of(amps, grid); }
double MomentumWavefunction::norm() const { return norm_of(amps, grid); }
Density1D MomentumWavefunction::density() const { return density_of(amps, grid); }

double WignerField::total() const {
  std::vector<double> rows(field.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = integrate_p(*this, field.row(i));
  return integrate(rows, field.qgrid());
}

double WignerField::min_value() const {
  return *std::min_element(field.values().begin(), field.values().end());
}

Wavefunction gaussian_wavefunction(const GaussianParams& params, const Grid1D& grid, const PhysContext& ctx) {
  ctx.validate();
  if (!(params.sigma_q > 0.0)) throw DomainError("sigma_q must be positive");
  const double s = params.sigma_q;
  const double inside = 0.5 * (std::erfc((grid.min() - params.q0) / (s * std::numbers::sqrt2)) -
                               std::erfc((grid.max() - params.q0) / (s * std::numbers::sqrt2)));
  check_tail(inside, kTailMassTolerance, "gaussian_wavefunction");

  Wavefunction psi{grid, std::vector<cplx>(grid.size()), ctx};
  const double pref = 1.0 / std::sqrt(s * std::sqrt(2.0 * kPi));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double d = (grid[k] - params.q0) / s;
    psi.amps[k] = pref * std::exp(-0.25 * d * d) * std::polar(1.0, params.p0 * grid[k] / ctx.hbar);
  }
  renormalize(psi.amps, grid);
  return psi;
}

Wavefunction hermite_gauss(int n, double omega, const Grid1D& grid, const PhysContext& ctx) {
  ctx.validate();
  if (n < 0) throw DomainError("hermite_gauss: n must be nonnegative");
  if (!(omega > 0.0)) throw DomainError("hermite_gauss: omega must be positive");
  const double scale = std::sqrt(ctx.mass * omega / ctx.hbar);  // 1 / oscillator length
  const double amp = std::sqrt(scale);

  const auto dens = [&](double x) {
    const double v = amp * hermite_function(n, scale * x);
    return v * v;
  };
  const double length = 1.0 / scale;
  const double inside = gauss_legendre(dens, grid.min(), grid.max(),
                                       panels_for(grid.max() - grid.min(), 0.25 * length / std::sqrt(n + 1.0)));
  check_tail(inside, kTailMassTolerance, "hermite_gauss");

  Wavefunction psi{grid, std::vector<cplx>(grid.size()), ctx};
  for (std::size_t k = 0; k < grid.size(); ++k) psi.amps[k] = amp * hermite_function(n, scale * grid[k]);
  renormalize(psi.amps, grid);
  return psi;
}

Wavefunction square_wave(double a, const Grid1D& grid, const PhysContext& ctx) {
  ctx.validate();
  if (!(a > 0.0)) throw DomainError("square_wave: width must be positive");
  if (grid.min() >= -0.5 * a || grid.max() <= 0.5 * a) {
    throw TailMassError("square_wave: grid does not cover [-a/2, a/2]");
  }
  Wavefunction psi{grid, std::vector<cplx>(grid.size()), ctx};
  const double height = 1.0 / std::sqrt(a);
  const double edge = 0.5 * a * (1.0 + 1e-12);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (std::abs(grid[k]) <= edge) psi.amps[k] = height;
  }
  return psi;
}

Grid1D square_wave_grid(double a, std::size_t n, std::size_t nodes_per_width) {
  if (nodes_per_width == 0 || nodes_per_width % 2 != 0) {
    throw InvalidGridError("square_wave_grid: nodes_per_width must be even and positive");
  }
  if (n % 2 != 0 || n <= nodes_per_width) {
    throw InvalidGridError("square_wave_grid: n must be even and exceed nodes_per_width");
  }
  return centered_grid(0.0, a / static_cast<double>(nodes_per_width), n);
}

Wavefunction sinc_wave(double b, const Grid1D& grid, const PhysContext& ctx) {
  ctx.validate();
  if (!(b > 0.0)) throw DomainError("sinc_wave: b must be positive");
  const double k = b / (2.0 * ctx.hbar);
  // Probability density in x = k q is sinc(x)^2 / pi.
  const auto dens = [](double x) {
    if (std::abs(x) < 1e-6) return (1.0 - x * x / 3.0) / kPi;
    const double s = std::sin(x) / x;
    return s * s / kPi;
  };
  const double x0 = k * grid.min();
  const double x1 = k * grid.max();
  const double inside = gauss_legendre(dens, x0, x1, panels_for(x1 - x0, 0.5));
  check_tail(inside, kSincTailMassTolerance, "sinc_wave");

  Wavefunction psi{grid, std::vector<cplx>(grid.size()), ctx};
  const double pref = std::sqrt(b / ctx.hbar) / std::sqrt(2.0 * kPi);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = k * grid[i];
    psi.amps[i] = pref * (std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x);
  }
  renormalize(psi.amps, grid);
  return psi;
}

Wavefunction state_from_target_profile(const Density1D& rho, std::optional<std::span<const double>> phase,
                                       const Grid1D& grid, const PhysContext& ctx) {
  ctx.validate();
  rho.require_normalized(1e-6);
  if (phase && phase->size() != rho.size()) {
    throw ShapeError("state_from_target_profile: phase must be sampled on the density grid");
  }
  const auto w = trapezoid_weights(rho.grid());
  std::vector<cplx> mom(rho.size());
  for (std::size_t k = 0; k < mom.size(); ++k) {
    const double s = phase ? (*phase)[k] : 0.0;
    mom[k] = w[k] * std::sqrt(rho[k]) * std::polar(1.0, s);
  }
  Wavefunction psi{grid, fourier_sum(mom, rho.grid(), grid, ctx.hbar, fft::Direction::Backward), ctx};
  const double pref = 1.0 / std::sqrt(2.0 * kPi * ctx.hbar);
  for (auto& a : psi.amps) a *= pref;
  const double raw = psi.norm();
  if (std::abs(raw - 1.0) > 1e-3) {
    throw TailMassError("state_from_target_profile: position grid holds only " + std::to_string(raw) +
                        " of the probability");
  }
  renormalize(psi.amps, grid);
  return psi;
}

WignerField mix(std::span<const WignerField> fields, std::span<const double> weights) {
  if (fields.empty()) throw InputError("mix: no fields given");
  if (fields.size() != weights.size()) throw ShapeError("mix: one weight per field required");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw WeightError("mix: weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12 * static_cast<double>(weights.size())) {
    throw WeightError("mix: weights must sum to 1");
  }
  WignerField out{Field2D(fields[0].qgrid(), fields[0].pgrid()), fields[0].ctx, true};
  auto& acc = out.field.values();
  for (std::size_t f = 0; f < fields.size(); ++f) {
    if (!fields[f].field.same_grids(fields[0].field)) throw ShapeError("mix: fields live on different grids");
    out.periodic_p = out.periodic_p && fields[f].periodic_p;
    const auto& v = fields[f].field.values();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += weights[f] * v[i];
  }
  return out;
}

}  // namespace wigflow
