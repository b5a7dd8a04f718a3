#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wigflow/types.hpp"

namespace wigflow {

/// Minimum-uncertainty Gaussian packet. The momentum width follows from
/// sigma_q via sigma_p = hbar / (2 sigma_q).
struct GaussianParams {
  double q0 = 0.0;
  double p0 = 0.0;
  double sigma_q = 1.0;

  double sigma_p(const PhysContext& ctx) const { return ctx.hbar / (2.0 * sigma_q); }
};

/// Tail-mass limits enforced by the constructors.
inline constexpr double kTailMassTolerance = 1e-6;
inline constexpr double kSincTailMassTolerance = 1e-4;

/// sqrt of the normal density N(q0, sigma_q^2), modulated by exp(i p0 q / hbar).
/// Throws TailMassError if more than kTailMassTolerance of the probability
/// falls outside the grid.
Wavefunction gaussian_wavefunction(const GaussianParams& params, const Grid1D& grid, const PhysContext& ctx);

/// n-th harmonic-oscillator eigenfunction for frequency omega and ctx.mass.
Wavefunction hermite_gauss(int n, double omega, const Grid1D& grid, const PhysContext& ctx);

/// Box of width a centered at 0 with height a^{-1/2}. The height is kept
/// exact, so the grid norm is 1 only up to how the box edges fall between
/// nodes; see square_wave_grid for an aligned grid.
Wavefunction square_wave(double a, const Grid1D& grid, const PhysContext& ctx = {});

/// Grid of n nodes placed so that the box edges +-a/2 fall midway between
/// nodes, with nodes_per_width nodes inside the box (must be even).
Grid1D square_wave_grid(double a, std::size_t n, std::size_t nodes_per_width);

/// sqrt(b/hbar) sinc(b q / 2 hbar) / sqrt(2 pi), whose momentum density is
/// flat on [-b/2, b/2]. Tail mass limit is kSincTailMassTolerance.
Wavefunction sinc_wave(double b, const Grid1D& grid, const PhysContext& ctx);

/// Builds psi whose momentum density is rho: the momentum amplitude is
/// sqrt(rho(p)) exp(i S(p)) and is carried to position space with the inverse
/// of the momentum_representation convention. phase, when given, is sampled
/// on rho's grid.
Wavefunction state_from_target_profile(const Density1D& rho, std::optional<std::span<const double>> phase,
                                       const Grid1D& grid, const PhysContext& ctx);

/// Pointwise convex combination of Wigner fields on identical grids; the
/// result keeps periodic_p only if every input has it.
WignerField mix(std::span<const WignerField> fields, std::span<const double> weights);

}  // namespace wigflow
