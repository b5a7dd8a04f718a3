#include "wigflow/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wigflow/errors.hpp"

namespace wigflow {

void PhysContext::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("hbar must be positive");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("mass must be positive");
}

std::vector<double> Grid1D::points() const {
  std::vector<double> out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = (*this)[k];
  return out;
}

bool Grid1D::same_as(const Grid1D& other, double rel_tol) const {
  if (n_ != other.n_) return false;
  const double scale = std::max(std::abs(max_ - min_), 1e-300);
  return std::abs(min_ - other.min_) <= rel_tol * scale && std::abs(max_ - other.max_) <= rel_tol * scale;
}

Grid1D make_grid(double min, double max, std::size_t n) {
  if (n < 2) throw InvalidGridError("grid needs at least 2 points, got " + std::to_string(n));
  if (!(max > min) || !std::isfinite(min) || !std::isfinite(max)) {
    throw InvalidGridError("grid needs max > min");
  }
  Grid1D g;
  g.min_ = min;
  g.max_ = max;
  g.n_ = n;
  g.spacing_ = (max - min) / static_cast<double>(n - 1);
  return g;
}

Grid1D centered_grid(double center, double spacing, std::size_t n) {
  const double half = 0.5 * spacing * static_cast<double>(n - 1);
  return make_grid(center - half, center + half, n);
}

double integrate(std::span<const double> samples, const Grid1D& grid) {
  if (samples.size() != grid.size()) {
    throw ShapeError("integrate: " + std::to_string(samples.size()) + " samples on a grid of " +
                     std::to_string(grid.size()));
  }
  double interior = 0.0;
  for (std::size_t k = 1; k + 1 < samples.size(); ++k) interior += samples[k];
  return grid.spacing() * (interior + 0.5 * (samples.front() + samples.back()));
}

std::vector<double> trapezoid_weights(const Grid1D& grid) {
  std::vector<double> w(grid.size(), grid.spacing());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

Field2D::Field2D(Grid1D qgrid, Grid1D pgrid)
    : qgrid_(qgrid), pgrid_(pgrid), values_(qgrid.size() * pgrid.size(), 0.0) {}

Field2D::Field2D(Grid1D qgrid, Grid1D pgrid, std::vector<double> values)
    : qgrid_(qgrid), pgrid_(pgrid), values_(std::move(values)) {
  if (values_.size() != qgrid_.size() * pgrid_.size()) {
    throw ShapeError("field values do not match grid dimensions");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw NumericalError("field contains a non-finite value");
  }
}

bool Field2D::same_grids(const Field2D& other) const {
  return qgrid_.same_as(other.qgrid_) && pgrid_.same_as(other.pgrid_);
}

namespace {

// Splits a continuous index into a cell index and a fraction; false if outside.
bool locate(double x, std::size_t n, std::size_t& cell, double& frac) {
  if (!(x >= 0.0) || x > static_cast<double>(n - 1)) return false;
  auto i = static_cast<std::size_t>(x);
  if (i >= n - 1) i = n - 2;
  cell = i;
  frac = x - static_cast<double>(i);
  return true;
}

}  // namespace

double interp_bilinear(const Field2D& field, double q, double p) {
  std::size_t i, k;
  double fq, fp;
  if (!locate(field.qgrid().index_of(q), field.rows(), i, fq)) return 0.0;
  if (!locate(field.pgrid().index_of(p), field.cols(), k, fp)) return 0.0;
  const double v00 = field(i, k);
  const double v01 = field(i, k + 1);
  const double v10 = field(i + 1, k);
  const double v11 = field(i + 1, k + 1);
  return (1.0 - fq) * ((1.0 - fp) * v00 + fp * v01) + fq * ((1.0 - fp) * v10 + fp * v11);
}

double interp_linear(std::span<const double> samples, const Grid1D& grid, double x) {
  std::size_t i;
  double f;
  if (!locate(grid.index_of(x), grid.size(), i, f)) return 0.0;
  return (1.0 - f) * samples[i] + f * samples[i + 1];
}

}  // namespace wigflow
