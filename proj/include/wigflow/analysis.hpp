#pragma once

#include <functional>
#include <span>
#include <utility>

#include "wigflow/states.hpp"
#include "wigflow/types.hpp"
#include "wigflow/wigner.hpp"

namespace wigflow {

/// Oriented line through (q1, 0) at angle theta to the q axis. The measured
/// region lies to the right of the direction (cos theta, sin theta), so
/// theta = pi/2 selects q > q1.
struct HalfPlaneQuery {
  double q1 = 0.0;
  double theta = 0.0;

  /// theta reduced to [0, 2 pi).
  double normalized_theta() const;
};

enum class WidthMethod { Stddev, HalfIqr };

struct WidthReport {
  double t = 0.0;
  double width = 0.0;
  WidthMethod method = WidthMethod::Stddev;
};

enum class Monotonicity { Increasing, Decreasing, NonMonotonic };

const char* to_string(Monotonicity m);

/// Integral of W over the half-plane right of the query line. Cells cut by the
/// line contribute their exact covered area fraction.
double half_plane_prob(const WignerField& w, const HalfPlaneQuery& query);

/// Angle of the back-sheared line for Pr(q > q1 | t) under free flow.
double sheared_line_angle(double t, double m);

/// Pr(q > q1 | t) for free flow, as the half-plane integral of the t = 0 field
/// to the right of the line through (q1, 0) with slope -m/t.
double prob_right_of(const WignerField& w0, double q1, double t, double m);

/// Same probability by evolving the field and integrating its q marginal.
double prob_right_of_direct(const WignerField& w0, double q1, double t, double m);

/// Time at which Pr(q > q1 | t) is extremal for a Gaussian packet. Throws
/// MonotoneCaseError when q1 == q0.
double extremum_time(const GaussianParams& params, double q1, double m, const PhysContext& ctx);

/// Tangent point of the sheared line and the one-sigma ellipse.
std::pair<double, double> gaussian_tangent_point(const GaussianParams& params, double m, double t,
                                                 const PhysContext& ctx);

/// sqrt(sigma_q^2 + (hbar t / (2 m sigma_q))^2).
double gaussian_width(const GaussianParams& params, double m, double t, const PhysContext& ctx);

/// q75 - q50. Throws NormalizationError if the density is off by more than tol.
double half_iqr(const Density1D& rho, double tol = 1e-3);

/// sigma_q0 sqrt(1 + (omega t)^2).
double width_law_hg(double sigma_q0, double omega, double t);

/// Ratio of the p and q half-IQRs of the numerically transformed eigenstate.
double hg_energy_ratio(int n, double omega, double m, const PhysContext& ctx);

/// q -> (m/t) rho_p(m q / t) on the p grid stretched by t/m. Throws
/// DomainError unless t > 0.
Density1D asymptotic_profile(const Density1D& rho_p, double m, double t);

/// Verdict on successive differences with a 1e-9 tolerance; needs >= 3 samples.
Monotonicity monotonicity_verdict(std::span<const double> samples);

/// Axis along which a closed-form initial Wigner function has bounded support.
enum class SupportAxis { Q, P };

/// q marginal at time t of a freely evolving Wigner function given in closed
/// form: the integral of w0 along the back-sheared line q' + p t / m = q.
/// w0 must vanish outside [support_lo, support_hi] on the given axis, which
/// is also the integration variable. Gauss-Legendre panels, with a panel edge
/// at 0.
double sheared_line_marginal(const PhaseSpaceFunction& w0, SupportAxis axis, double support_lo, double support_hi,
                             double q, double t, double m, std::size_t panels = 128);

/// Minimum of f over [lo, hi]: a uniform scan of `scan` points followed by a
/// golden-section refinement to tol.
double locate_minimum(const std::function<double(double)>& f, double lo, double hi, std::size_t scan,
                      double tol = 1e-4);

/// L1 distance between two densities on the same grid.
double l1_distance(const Density1D& a, const Density1D& b);

}  // namespace wigflow
