#pragma once

#include <functional>

#include "wigflow/states.hpp"
#include "wigflow/types.hpp"

namespace wigflow {

// Conventions. The Wigner function of psi is
//
//   W(q, p) = 1/(2 pi) * integral dy exp(-i p y) psi(q + y hbar/2) psi*(q - y hbar/2)
//
// and the momentum wavefunction is
//
//   psi~(p) = (2 pi hbar)^{-1/2} * integral dq psi(q) exp(-i p q / hbar),
//
// the pair under which integral W dp = |psi(q)|^2 and integral W dq = |psi~(p)|^2.
//
// Discretely, y is sampled with step 2 dq / hbar so that q +- y hbar/2 are grid
// nodes. The p axis is then the reciprocal lattice of y for some FFT length L:
// dp = pi hbar / (L dq), with every p node an integer multiple of dp.

/// Phase-space evaluator W(q, p).
using PhaseSpaceFunction = std::function<double(double, double)>;

/// Full-band p grid for a q grid: L = n, p in [-pi hbar/(2 dq), pi hbar/(2 dq)).
Grid1D wigner_pgrid(const Grid1D& qgrid, double hbar);

/// One full period of the transform with FFT length L: the same band as
/// above with L nodes, independent of the number of q nodes.
Grid1D wigner_period_grid(const Grid1D& qgrid, double hbar, std::size_t L);

/// p grid with n_p nodes (odd n_p puts a node at p = 0) spanning roughly
/// [-half_range, half_range], snapped to the nearest admissible spacing.
Grid1D wigner_pgrid(const Grid1D& qgrid, double hbar, std::size_t n_p, double half_range);

/// FFT length L implied by a (qgrid, pgrid) pair, or 0 if the pair is incompatible.
std::size_t wigner_fft_length(const Grid1D& qgrid, const Grid1D& pgrid, double hbar);

/// Discrete Wigner transform; throws ShapeError for an incompatible pgrid and
/// NumericalError if the transform is not real to 1e-10.
WignerField wigner_transform(const Wavefunction& psi, const Grid1D& pgrid);

/// Rows restricted to qgrid, whose nodes must be nodes of psi's grid.
WignerField wigner_transform(const Wavefunction& psi, const Grid1D& qgrid, const Grid1D& pgrid);

/// Evaluates W at (qgrid x pgrid) nodes.
Field2D sample(const PhaseSpaceFunction& w, const Grid1D& qgrid, const Grid1D& pgrid);

/// 2-D normal density with mean (q0, p0) and covariance diag(sigma_q^2, sigma_p^2).
PhaseSpaceFunction gaussian_wigner(const GaussianParams& params, const PhysContext& ctx);

/// Wigner function of the width-a box: sin(p (a - 2|q|)/hbar) / (a pi p) on
/// |q| <= a/2 and 0 outside.
PhaseSpaceFunction square_wave_wigner(double a, const PhysContext& ctx);

/// Wigner function of the sinc state whose momentum density is flat on
/// [-b/2, b/2]: sin(q (b - 2|p|)/hbar) / (b pi q) for |p| <= b/2, else 0.
PhaseSpaceFunction sinc_wave_wigner(double b, const PhysContext& ctx);

/// (hbar / (pi a p^2)) (1 - cos(p a / hbar)), with limit a / (2 pi hbar) at p = 0.
double square_wave_p_marginal(double a, double p, const PhysContext& ctx);

/// f(t) = (1 - cos t) / (pi t^2), f(0) = 1/(2 pi).
double shape_f(double t);

/// Integral over p of samples on w's p grid, honouring periodic_p.
double integrate_p(const WignerField& w, std::span<const double> samples);

/// Row integrals over p without the clamping of marginal_q; evolved fields
/// of discontinuous states carry interpolation error that can dip below 0.
std::vector<double> marginal_q_values(const WignerField& w);

Density1D marginal_q(const WignerField& w);
Density1D marginal_p(const WignerField& w);

/// psi~ on an arbitrary p grid.
MomentumWavefunction momentum_representation(const Wavefunction& psi, const Grid1D& pgrid);

/// Inverse of momentum_representation onto a q grid (rectangle rule in p).
Wavefunction position_representation(const MomentumWavefunction& phi, const Grid1D& qgrid);

/// Band-limited (trigonometric) interpolation of psi onto a grid `factor`
/// times finer over the same range. Resampling by 2 before the transform puts
/// the whole momentum band of the samples inside the Wigner p band.
Wavefunction resample_band_limited(const Wavefunction& psi, std::size_t factor);

/// 2 pi hbar * double integral of W^2.
double purity(const WignerField& w);

}  // namespace wigflow
