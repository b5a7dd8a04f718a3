#include "wigflow/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wigflow/errors.hpp"

namespace wigflow {

Density1D::Density1D(Grid1D grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw ShapeError("density values do not match grid");
  for (double& v : values_) {
    if (!std::isfinite(v)) throw NumericalError("density contains a non-finite value");
    if (v < 0.0) {
      if (v < -kClampTolerance) {
        throw NumericalError("density value " + std::to_string(v) + " is below the clamp tolerance");
      }
      v = 0.0;
    }
  }
}

double Density1D::total() const { return integrate(values_, grid_); }

double Density1D::mean() const {
  std::vector<double> m(values_.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = grid_[k] * values_[k];
  return integrate(m, grid_) / total();
}

double Density1D::stddev() const {
  const double mu = mean();
  std::vector<double> m(values_.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double d = grid_[k] - mu;
    m[k] = d * d * values_[k];
  }
  return std::sqrt(integrate(m, grid_) / total());
}

void Density1D::require_normalized(double tol) const {
  const double t = total();
  if (std::abs(t - 1.0) > tol) {
    throw NormalizationError("density integrates to " + std::to_string(t) + ", expected 1");
  }
}

std::vector<double> Density1D::cdf() const {
  std::vector<double> c(values_.size(), 0.0);
  const double h = 0.5 * grid_.spacing();
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = c[k - 1] + h * (values_[k - 1] + values_[k]);
  return c;
}

double Density1D::quantile(double prob) const {
  if (!(prob >= 0.0 && prob <= 1.0)) throw InputError("quantile probability outside [0, 1]");
  const auto c = cdf();
  const double target = prob * c.back();
  const auto it = std::lower_bound(c.begin(), c.end(), target);
  const auto k = static_cast<std::size_t>(it - c.begin());
  if (k == 0) return grid_[0];
  if (k >= c.size()) return grid_.max();
  if (c[k] == target) return grid_[k];
  const double frac = (target - c[k - 1]) / (c[k] - c[k - 1]);
  return grid_[k - 1] + frac * grid_.spacing();
}

double Density1D::mass_above(double x) const {
  const auto c = cdf();
  if (x <= grid_.min()) return c.back();
  if (x >= grid_.max()) return 0.0;
  auto k = static_cast<std::size_t>(grid_.index_of(x));
  k = std::min(k, values_.size() - 2);
  const double dx = x - grid_[k];
  const double vx = at(x);
  const double below = c[k] + 0.5 * dx * (values_[k] + vx);
  return c.back() - below;
}

double Density1D::at(double x) const { return interp_linear(values_, grid_, x); }

}  // namespace wigflow
