#include "wigflow/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "wigflow/errors.hpp"
#include "wigflow/flows.hpp"
#include "wigflow/quadrature.hpp"

namespace wigflow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMonotoneTolerance = 1e-9;

struct Vertex {
  double x, y, s;
};

// Fraction of the cell [-dx, dx] x [-dy, dy] where s_c + a x + b y > 0.
double covered_fraction(double s_c, double a, double b, double dx, double dy) {
  const double reach = std::abs(a) * dx + std::abs(b) * dy;
  if (s_c >= reach) return 1.0;
  if (s_c <= -reach) return 0.0;
  const std::array<std::array<double, 2>, 4> corners{{{-dx, -dy}, {dx, -dy}, {dx, dy}, {-dx, dy}}};
  std::array<Vertex, 8> poly{};
  std::size_t count = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& c0 = corners[k];
    const auto& c1 = corners[(k + 1) % 4];
    const double s0 = s_c + a * c0[0] + b * c0[1];
    const double s1 = s_c + a * c1[0] + b * c1[1];
    if (s0 > 0.0) poly[count++] = {c0[0], c0[1], s0};
    if ((s0 > 0.0) != (s1 > 0.0)) {
      const double f = s0 / (s0 - s1);
      poly[count++] = {c0[0] + f * (c1[0] - c0[0]), c0[1] + f * (c1[1] - c0[1]), 0.0};
    }
  }
  double area2 = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& v0 = poly[k];
    const auto& v1 = poly[(k + 1) % count];
    area2 += v0.x * v1.y - v1.x * v0.y;
  }
  return std::abs(area2) / (8.0 * dx * dy);
}

}  // namespace

const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::NonMonotonic: return "non-monotonic";
  }
  return "unknown";
}

double HalfPlaneQuery::normalized_theta() const {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  return t;
}

double half_plane_prob(const WignerField& w, const HalfPlaneQuery& query) {
  const double theta = query.normalized_theta();
  const double a = std::sin(theta);
  const double b = -std::cos(theta);
  const auto& qg = w.qgrid();
  const auto& pg = w.pgrid();
  const double dx = 0.5 * qg.spacing();
  const double dy = 0.5 * pg.spacing();
  const long rows = static_cast<long>(qg.size());
  const long cols = static_cast<long>(pg.size());
  const double reach = std::abs(a) * dx + std::abs(b) * dy;
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (long ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto row = w.field.row(i);
    const double sq = (qg[i] - query.q1) * a;
    if (b == 0.0) {
      double total = 0.0;
      for (double v : row) total += v;
      sum += covered_fraction(sq, a, b, dx, dy) * total;
      continue;
    }
    // s(k) = sq + b p_k is linear in k, so only cells with |s| < reach are
    // cut; the rest of the row is wholly inside or outside.
    const double k_a = ((-reach - sq) / b - pg.min()) / pg.spacing();
    const double k_b = ((reach - sq) / b - pg.min()) / pg.spacing();
    const long lo = std::clamp(static_cast<long>(std::floor(std::min(k_a, k_b))) - 1, 0L, cols);
    const long hi = std::clamp(static_cast<long>(std::ceil(std::max(k_a, k_b))) + 2, lo, cols);
    double acc = 0.0;
    const long inside_lo = b > 0.0 ? hi : 0;
    const long inside_hi = b > 0.0 ? cols : lo;
    for (long k = inside_lo; k < inside_hi; ++k) acc += row[static_cast<std::size_t>(k)];
    for (long k = lo; k < hi; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const double frac = covered_fraction(sq + b * pg[kk], a, b, dx, dy);
      if (frac > 0.0) acc += frac * row[kk];
    }
    sum += acc;
  }
  return sum * qg.spacing() * pg.spacing();
}

double sheared_line_angle(double t, double m) { return std::atan2(1.0, -t / m); }

double prob_right_of(const WignerField& w0, double q1, double t, double m) {
  if (!(m > 0.0)) throw DomainError("prob_right_of: mass must be positive");
  return half_plane_prob(w0, {q1, sheared_line_angle(t, m)});
}

double prob_right_of_direct(const WignerField& w0, double q1, double t, double m) {
  const auto evolved = apply_flow(w0, flow_for(Free{m}, t));
  return marginal_q(evolved).mass_above(q1);
}

double extremum_time(const GaussianParams& params, double q1, double m, const PhysContext& ctx) {
  if (q1 == params.q0) {
    throw MonotoneCaseError("extremum_time: q1 == q0, Pr(q > q1 | t) is monotonic");
  }
  const double sq = params.sigma_q;
  const double sp = params.sigma_p(ctx);
  return -m * params.p0 * sq * sq / ((q1 - params.q0) * sp * sp);
}

std::pair<double, double> gaussian_tangent_point(const GaussianParams& params, double m, double t,
                                                 const PhysContext& ctx) {
  const double sq = params.sigma_q;
  const double sp = params.sigma_p(ctx);
  const double r = sp * t / (sq * m);
  const double root = std::sqrt(1.0 + r * r);
  // sigma_p / sqrt(1 + r^-2) rewritten so that r = 0 needs no special case.
  return {sq / root, sp * std::abs(r) / root};
}

double gaussian_width(const GaussianParams& params, double m, double t, const PhysContext& ctx) {
  const double sq = params.sigma_q;
  const double spread = ctx.hbar * t / (2.0 * m * sq);
  return std::sqrt(sq * sq + spread * spread);
}

double half_iqr(const Density1D& rho, double tol) {
  rho.require_normalized(tol);
  return rho.quantile(0.75) - rho.quantile(0.5);
}

double width_law_hg(double sigma_q0, double omega, double t) {
  if (!(sigma_q0 > 0.0) || !(omega > 0.0)) throw DomainError("width_law_hg: need sigma_q0 > 0 and omega > 0");
  return sigma_q0 * std::sqrt(1.0 + omega * omega * t * t);
}

double hg_energy_ratio(int n, double omega, double m, const PhysContext& ctx) {
  const PhysContext local{ctx.hbar, m};
  local.validate();
  if (!(omega > 0.0)) throw DomainError("hg_energy_ratio: omega must be positive");
  const double length = std::sqrt(ctx.hbar / (m * omega));
  const double turning = length * std::sqrt(2.0 * n + 1.0);
  const double qhalf = turning + 10.0 * length;
  const auto qgrid = make_grid(-qhalf, qhalf, 512);
  const double phalf = m * omega * qhalf;
  const auto pgrid = wigner_pgrid(qgrid, ctx.hbar, 513, phalf);
  const auto w = wigner_transform(hermite_gauss(n, omega, qgrid, local), pgrid);
  return half_iqr(marginal_p(w)) / half_iqr(marginal_q(w));
}

Density1D asymptotic_profile(const Density1D& rho_p, double m, double t) {
  if (!(t > 0.0)) throw DomainError("asymptotic_profile: t must be positive");
  if (!(m > 0.0)) throw DomainError("asymptotic_profile: mass must be positive");
  const double stretch = t / m;
  const auto& pg = rho_p.grid();
  auto qgrid = make_grid(pg.min() * stretch, pg.max() * stretch, pg.size());
  std::vector<double> v(rho_p.values());
  for (auto& x : v) x /= stretch;
  return Density1D(qgrid, std::move(v));
}

Monotonicity monotonicity_verdict(std::span<const double> samples) {
  if (samples.size() < 3) throw InputError("monotonicity_verdict: need at least 3 samples");
  bool up = true;
  bool down = true;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const double d = samples[k] - samples[k - 1];
    if (d < -kMonotoneTolerance) up = false;
    if (d > kMonotoneTolerance) down = false;
  }
  if (up) return Monotonicity::Increasing;
  if (down) return Monotonicity::Decreasing;
  return Monotonicity::NonMonotonic;
}

double sheared_line_marginal(const PhaseSpaceFunction& w0, SupportAxis axis, double support_lo, double support_hi,
                             double q, double t, double m, std::size_t panels) {
  if (t == 0.0) throw DomainError("sheared_line_marginal: t must be nonzero");
  if (!(support_hi > support_lo)) throw InputError("sheared_line_marginal: empty support");
  const double slope = m / t;
  const auto along_q = [&](double qp) { return w0(qp, (q - qp) * slope); };
  const auto along_p = [&](double p) { return w0(q - p / slope, p); };
  const auto integrate_split = [&](const auto& f) {
    if (support_lo < 0.0 && support_hi > 0.0) {
      const auto half = std::max<std::size_t>(panels / 2, 1);
      return gauss_legendre(f, support_lo, 0.0, half) + gauss_legendre(f, 0.0, support_hi, half);
    }
    return gauss_legendre(f, support_lo, support_hi, panels);
  };
  if (axis == SupportAxis::Q) return std::abs(slope) * integrate_split(along_q);
  return integrate_split(along_p);
}

double locate_minimum(const std::function<double(double)>& f, double lo, double hi, std::size_t scan, double tol) {
  if (scan < 3 || !(hi > lo)) throw InputError("locate_minimum: need scan >= 3 and hi > lo");
  const double step = (hi - lo) / static_cast<double>(scan - 1);
  std::size_t best = 0;
  double best_val = f(lo);
  for (std::size_t k = 1; k < scan; ++k) {
    const double v = f(lo + step * static_cast<double>(k));
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  double a = lo + step * static_cast<double>(best == 0 ? 0 : best - 1);
  double b = lo + step * static_cast<double>(std::min(best + 1, scan - 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double l1_distance(const Density1D& a, const Density1D& b) {
  if (!a.grid().same_as(b.grid(), 1e-9)) throw ShapeError("l1_distance: densities on different grids");
  std::vector<double> d(a.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::abs(a[k] - b[k]);
  return integrate(d, a.grid());
}

}  // namespace wigflow
