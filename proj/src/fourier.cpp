#include "wigflow/fourier.hpp"

#include <cmath>
#include <numbers>

#include "wigflow/errors.hpp"

namespace wigflow {

using fft::cplx;

std::size_t reciprocal_length(const Grid1D& from, const Grid1D& to, double hbar) {
  const double L = 2.0 * std::numbers::pi * hbar / (from.spacing() * to.spacing());
  const double rounded = std::round(L);
  if (rounded < 1.0 || rounded > 1e8) return 0;
  if (std::abs(L - rounded) > 1e-9 * rounded) return 0;
  return static_cast<std::size_t>(rounded);
}

std::vector<cplx> fourier_sum(std::span<const cplx> f, const Grid1D& from, const Grid1D& to, double hbar,
                              fft::Direction direction) {
  if (f.size() != from.size()) throw ShapeError("fourier_sum: samples do not match source grid");
  const double sign = direction == fft::Direction::Forward ? -1.0 : 1.0;
  std::vector<cplx> out(to.size());

  if (const std::size_t L = reciprocal_length(from, to, hbar); L != 0) {
    std::vector<cplx> g(f.size());
    const double pre = sign * to.min() * from.spacing() / hbar;
    for (std::size_t n = 0; n < f.size(); ++n) g[n] = f[n] * std::polar(1.0, pre * static_cast<double>(n));
    fft::LatticeDft dft(L, direction);
    fft::LatticeDft::Workspace ws(L);
    dft.transform(g, 0, 0, out, ws);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= std::polar(1.0, sign * to[k] * from.min() / hbar);
    return out;
  }

  // Direct summation; the phase step is refreshed periodically to bound drift.
  constexpr std::size_t kRefresh = 64;
#pragma omp parallel for schedule(static)
  for (long kk = 0; kk < static_cast<long>(to.size()); ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    const double x = to[k];
    const cplx step = std::polar(1.0, sign * x * from.spacing() / hbar);
    cplx acc{};
    cplx phase{};
    for (std::size_t n = 0; n < f.size(); ++n) {
      if (n % kRefresh == 0) {
        phase = std::polar(1.0, sign * x * from[n] / hbar);
      }
      acc += f[n] * phase;
      phase *= step;
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace wigflow
