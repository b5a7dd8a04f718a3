#pragma once

#include <span>
#include <vector>

#include "wigflow/fft.hpp"
#include "wigflow/grid.hpp"

namespace wigflow {

/// out[k] = sum_n f[n] * exp(sign * i * to[k] * from[n] / hbar), with sign -1
/// for Forward and +1 for Backward. No quadrature weights are applied.
///
/// When from.spacing * to.spacing = 2 pi hbar / L for an integer L the sum is
/// evaluated with an FFT of length L; otherwise it is summed directly.
std::vector<fft::cplx> fourier_sum(std::span<const fft::cplx> f, const Grid1D& from, const Grid1D& to,
                                   double hbar, fft::Direction direction);

/// The integer L above, or 0 when the grids are not reciprocal lattices.
std::size_t reciprocal_length(const Grid1D& from, const Grid1D& to, double hbar);

}  // namespace wigflow
