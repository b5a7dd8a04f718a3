#pragma once

#include <vector>

#include "wigflow/grid.hpp"

namespace wigflow {

/// Values in [-kClampTolerance, 0) are treated as round-off and clamped to 0.
inline constexpr double kClampTolerance = 1e-9;

/// Nonnegative 1-D density sampled on a uniform grid.
class Density1D {
 public:
  Density1D() = default;

  /// Clamps tiny negatives; throws NumericalError below -kClampTolerance.
  Density1D(Grid1D grid, std::vector<double> values);

  const Grid1D& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }
  std::size_t size() const { return values_.size(); }

  double total() const;
  double mean() const;
  double stddev() const;

  /// Throws NormalizationError when |total - 1| > tol.
  void require_normalized(double tol) const;

  /// Running trapezoid integral, cdf[0] = 0.
  std::vector<double> cdf() const;

  /// Smallest x with CDF(x) = prob * total, by linear interpolation of the
  /// trapezoid CDF. Flat stretches resolve to their lowest grid point.
  double quantile(double prob) const;

  /// Probability mass on (x, max], linear interpolation inside the cell.
  double mass_above(double x) const;

  /// Value at x by linear interpolation, 0 outside the grid.
  double at(double x) const;

 private:
  Grid1D grid_;
  std::vector<double> values_;
};

}  // namespace wigflow
