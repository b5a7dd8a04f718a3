#pragma once

#include <array>
#include <cstddef>

namespace wigflow {

/// Composite 8-point Gauss-Legendre rule on [a, b] split into equal panels.
template <typename F>
auto gauss_legendre(F&& f, double a, double b, std::size_t panels) {
  using R = decltype(f(a));
  static constexpr std::array<double, 4> kNodes = {0.1834346424956498, 0.5255324099163290,
                                                   0.7966664774136267, 0.9602898564975363};
  static constexpr std::array<double, 4> kWeights = {0.3626837833783620, 0.3137066458778873,
                                                     0.2223810344533745, 0.1012285362903763};
  const double width = (b - a) / static_cast<double>(panels);
  R sum{};
  for (std::size_t j = 0; j < panels; ++j) {
    const double mid = a + (static_cast<double>(j) + 0.5) * width;
    const double half = 0.5 * width;
    R panel{};
    for (std::size_t k = 0; k < kNodes.size(); ++k) {
      panel += kWeights[k] * (f(mid - half * kNodes[k]) + f(mid + half * kNodes[k]));
    }
    sum += half * panel;
  }
  return sum;
}

}  // namespace wigflow
