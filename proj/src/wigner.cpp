#include "wigflow/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wigflow/errors.hpp"
#include "wigflow/fft.hpp"
#include "wigflow/fourier.hpp"

namespace wigflow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLimitThreshold = 1e-6;
constexpr double kRealnessTolerance = 1e-10;

}  // namespace

Grid1D wigner_pgrid(const Grid1D& qgrid, double hbar) { return wigner_period_grid(qgrid, hbar, qgrid.size()); }

Grid1D wigner_period_grid(const Grid1D& qgrid, double hbar, std::size_t n) {
  if (n < 2) throw InvalidGridError("wigner_period_grid: need L >= 2");
  const double dp = kPi * hbar / (static_cast<double>(n) * qgrid.spacing());
  const double pmin = -static_cast<double>(n / 2) * dp;
  return make_grid(pmin, pmin + static_cast<double>(n - 1) * dp, n);
}

Grid1D wigner_pgrid(const Grid1D& qgrid, double hbar, std::size_t n_p, double half_range) {
  if (n_p < 2 || !(half_range > 0.0)) throw InvalidGridError("wigner_pgrid: need n_p >= 2 and half_range > 0");
  const double target = 2.0 * half_range / static_cast<double>(n_p - 1);
  const double L = std::max(1.0, std::round(kPi * hbar / (qgrid.spacing() * target)));
  const double dp = kPi * hbar / (L * qgrid.spacing());
  const double pmin = -static_cast<double>((n_p - 1) / 2) * dp;
  return make_grid(pmin, pmin + static_cast<double>(n_p - 1) * dp, n_p);
}

std::size_t wigner_fft_length(const Grid1D& qgrid, const Grid1D& pgrid, double hbar) {
  const double L = kPi * hbar / (pgrid.spacing() * qgrid.spacing());
  const double Lr = std::round(L);
  if (Lr < 1.0 || std::abs(L - Lr) > 1e-9 * Lr) return 0;
  const double k0 = pgrid.min() / pgrid.spacing();
  if (std::abs(k0 - std::round(k0)) > 1e-6) return 0;
  return static_cast<std::size_t>(Lr);
}

WignerField wigner_transform(const Wavefunction& psi, const Grid1D& pgrid) {
  return wigner_transform(psi, psi.grid, pgrid);
}

WignerField wigner_transform(const Wavefunction& psi, const Grid1D& qgrid, const Grid1D& pgrid) {
  const double hbar = psi.ctx.hbar;
  const std::size_t L = wigner_fft_length(qgrid, pgrid, hbar);
  if (L == 0) {
    throw ShapeError("wigner_transform: p grid is not reciprocal to the q grid (need dp = pi hbar / (L dq))");
  }
  if (psi.amps.size() != psi.grid.size()) throw ShapeError("wigner_transform: amplitudes do not match grid");
  const double offset = (qgrid.min() - psi.grid.min()) / psi.grid.spacing();
  const long first = std::lround(offset);
  if (std::abs(qgrid.spacing() - psi.grid.spacing()) > 1e-9 * psi.grid.spacing() ||
      std::abs(offset - static_cast<double>(first)) > 1e-6 || first < 0 ||
      first + static_cast<long>(qgrid.size()) > static_cast<long>(psi.grid.size())) {
    throw ShapeError("wigner_transform: q rows must be nodes of the wavefunction grid");
  }

  const long n = static_cast<long>(psi.grid.size());
  const long rows = static_cast<long>(qgrid.size());
  const long k0 = std::lround(pgrid.min() / pgrid.spacing());
  const double dy = 2.0 * qgrid.spacing() / hbar;
  const double scale = dy / (2.0 * kPi);
  const auto& amps = psi.amps;

  WignerField out{Field2D(qgrid, pgrid), psi.ctx, pgrid.size() == L};
  const fft::LatticeDft dft(L, fft::Direction::Forward);
  double worst_imag = 0.0;

#pragma omp parallel reduction(max : worst_imag)
  {
    fft::LatticeDft::Workspace ws(L);
    std::vector<fft::cplx> corr;
    std::vector<fft::cplx> spectrum(pgrid.size());
#pragma omp for schedule(static)
    for (long r = 0; r < rows; ++r) {
      const long i = first + r;
      const long jmax = std::min(i, n - 1 - i);
      corr.resize(static_cast<std::size_t>(2 * jmax + 1));
      for (long j = -jmax; j <= jmax; ++j) {
        corr[static_cast<std::size_t>(j + jmax)] = amps[i + j] * std::conj(amps[i - j]);
      }
      dft.transform(corr, -jmax, k0, spectrum, ws);
      auto row = out.field.row(static_cast<std::size_t>(r));
      for (std::size_t k = 0; k < row.size(); ++k) {
        row[k] = scale * spectrum[k].real();
        worst_imag = std::max(worst_imag, scale * std::abs(spectrum[k].imag()));
      }
    }
  }
  if (worst_imag > kRealnessTolerance) {
    throw NumericalError("wigner_transform: imaginary residue " + std::to_string(worst_imag));
  }
  return out;
}

Field2D sample(const PhaseSpaceFunction& w, const Grid1D& qgrid, const Grid1D& pgrid) {
  Field2D f(qgrid, pgrid);
  for (std::size_t i = 0; i < qgrid.size(); ++i) {
    for (std::size_t k = 0; k < pgrid.size(); ++k) f(i, k) = w(qgrid[i], pgrid[k]);
  }
  return f;
}

PhaseSpaceFunction gaussian_wigner(const GaussianParams& params, const PhysContext& ctx) {
  const double sq = params.sigma_q;
  const double sp = params.sigma_p(ctx);
  const double peak = 1.0 / (2.0 * kPi * sq * sp);
  return [=](double q, double p) {
    const double u = (q - params.q0) / sq;
    const double v = (p - params.p0) / sp;
    return peak * std::exp(-0.5 * (u * u + v * v));
  };
}

PhaseSpaceFunction square_wave_wigner(double a, const PhysContext& ctx) {
  if (!(a > 0.0)) throw DomainError("square_wave_wigner: width must be positive");
  const double hbar = ctx.hbar;
  return [=](double q, double p) {
    const double len = a - 2.0 * std::abs(q);
    if (len <= 0.0) return 0.0;
    const double x = p * len / hbar;
    if (std::abs(x) < kLimitThreshold) return len / (a * kPi * hbar) * (1.0 - x * x / 6.0);
    return std::sin(x) / (a * kPi * p);
  };
}

PhaseSpaceFunction sinc_wave_wigner(double b, const PhysContext& ctx) {
  if (!(b > 0.0)) throw DomainError("sinc_wave_wigner: b must be positive");
  const double hbar = ctx.hbar;
  return [=](double q, double p) {
    const double len = b - 2.0 * std::abs(p);
    if (len <= 0.0) return 0.0;
    const double x = q * len / hbar;
    if (std::abs(x) < kLimitThreshold) return len / (b * kPi * hbar) * (1.0 - x * x / 6.0);
    return std::sin(x) / (b * kPi * q);
  };
}

double shape_f(double t) {
  if (std::abs(t) < kLimitThreshold) return (1.0 - t * t / 12.0) / (2.0 * kPi);
  const double s = std::sin(0.5 * t);
  return 2.0 * s * s / (kPi * t * t);
}

double square_wave_p_marginal(double a, double p, const PhysContext& ctx) {
  if (!(a > 0.0)) throw DomainError("square_wave_p_marginal: width must be positive");
  const double x = p * a / ctx.hbar;
  if (std::abs(x) < kLimitThreshold) return a / (2.0 * kPi * ctx.hbar) * (1.0 - x * x / 12.0);
  const double s = std::sin(0.5 * x);
  return ctx.hbar * 2.0 * s * s / (kPi * a * p * p);
}

double integrate_p(const WignerField& w, std::span<const double> samples) {
  if (!w.periodic_p) return integrate(samples, w.pgrid());
  double s = 0.0;
  for (double v : samples) s += v;
  return s * w.pgrid().spacing();
}

std::vector<double> marginal_q_values(const WignerField& w) {
  std::vector<double> v(w.field.rows());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = integrate_p(w, w.field.row(i));
  return v;
}

Density1D marginal_q(const WignerField& w) { return Density1D(w.qgrid(), marginal_q_values(w)); }

Density1D marginal_p(const WignerField& w) {
  const auto wq = trapezoid_weights(w.qgrid());
  std::vector<double> v(w.field.cols(), 0.0);
  for (std::size_t i = 0; i < w.field.rows(); ++i) {
    const auto row = w.field.row(i);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += wq[i] * row[k];
  }
  return Density1D(w.pgrid(), std::move(v));
}

MomentumWavefunction momentum_representation(const Wavefunction& psi, const Grid1D& pgrid) {
  auto amps = fourier_sum(psi.amps, psi.grid, pgrid, psi.ctx.hbar, fft::Direction::Forward);
  const double scale = psi.grid.spacing() / std::sqrt(2.0 * kPi * psi.ctx.hbar);
  for (auto& a : amps) a *= scale;
  return {pgrid, std::move(amps), psi.ctx};
}

Wavefunction position_representation(const MomentumWavefunction& phi, const Grid1D& qgrid) {
  auto amps = fourier_sum(phi.amps, phi.grid, qgrid, phi.ctx.hbar, fft::Direction::Backward);
  const double scale = phi.grid.spacing() / std::sqrt(2.0 * kPi * phi.ctx.hbar);
  for (auto& a : amps) a *= scale;
  return {qgrid, std::move(amps), phi.ctx};
}

Wavefunction resample_band_limited(const Wavefunction& psi, std::size_t factor) {
  if (factor == 0) throw InputError("resample_band_limited: factor must be positive");
  const Grid1D& g = psi.grid;
  const std::size_t n = g.size();
  const double dp = 2.0 * kPi * psi.ctx.hbar / (static_cast<double>(n) * g.spacing());
  const double half = static_cast<double>(n / 2) * dp;
  // One full period of the sample spectrum; the Nyquist term is split evenly
  // between its two ends.
  const Grid1D pgrid = make_grid(-half, half, 2 * (n / 2) + 1);
  auto phi = momentum_representation(psi, pgrid);
  if (n % 2 == 0) {
    phi.amps.front() *= 0.5;
    phi.amps.back() *= 0.5;
  }
  const Grid1D fine = make_grid(g.min(), g.max(), (n - 1) * factor + 1);
  return position_representation(phi, fine);
}

double purity(const WignerField& w) {
  std::vector<double> rows(w.field.rows());
  std::vector<double> sq(w.field.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row = w.field.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) sq[k] = row[k] * row[k];
    rows[i] = integrate_p(w, sq);
  }
  return 2.0 * kPi * w.ctx.hbar * integrate(rows, w.qgrid());
}

}  // namespace wigflow
