#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wigflow {

/// Physical constants carried explicitly through every computation.
struct PhysContext {
  double hbar = 1.0;
  double mass = 1.0;

  /// Throws DomainError unless hbar > 0 and mass > 0.
  void validate() const;
};

/// Uniform grid of n points from min to max inclusive.
class Grid1D {
 public:
  Grid1D() = default;

  double min() const { return min_; }
  double max() const { return max_; }
  std::size_t size() const { return n_; }
  double spacing() const { return spacing_; }
  double operator[](std::size_t k) const { return min_ + static_cast<double>(k) * spacing_; }
  std::vector<double> points() const;

  /// Continuous index of coordinate x, i.e. (x - min) / spacing.
  double index_of(double x) const { return (x - min_) / spacing_; }

  bool same_as(const Grid1D& other, double rel_tol = 1e-12) const;

  friend Grid1D make_grid(double min, double max, std::size_t n);

 private:
  double min_ = 0.0;
  double max_ = 1.0;
  std::size_t n_ = 2;
  double spacing_ = 1.0;
};

/// Throws InvalidGridError for n < 2 or max <= min.
Grid1D make_grid(double min, double max, std::size_t n);

/// Grid with the given spacing and n points placed symmetrically about center.
Grid1D centered_grid(double center, double spacing, std::size_t n);

/// Trapezoid rule. Throws ShapeError on a length mismatch.
double integrate(std::span<const double> samples, const Grid1D& grid);

/// Trapezoid weights (spacing, halved at both ends).
std::vector<double> trapezoid_weights(const Grid1D& grid);

/// Real samples on a q x p rectangle, stored row-major with one row per q node.
class Field2D {
 public:
  Field2D() = default;
  Field2D(Grid1D qgrid, Grid1D pgrid);
  Field2D(Grid1D qgrid, Grid1D pgrid, std::vector<double> values);

  const Grid1D& qgrid() const { return qgrid_; }
  const Grid1D& pgrid() const { return pgrid_; }
  std::size_t rows() const { return qgrid_.size(); }
  std::size_t cols() const { return pgrid_.size(); }

  double& operator()(std::size_t iq, std::size_t ip) { return values_[iq * cols() + ip]; }
  double operator()(std::size_t iq, std::size_t ip) const { return values_[iq * cols() + ip]; }

  std::span<double> row(std::size_t iq) { return {values_.data() + iq * cols(), cols()}; }
  std::span<const double> row(std::size_t iq) const { return {values_.data() + iq * cols(), cols()}; }

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  bool same_grids(const Field2D& other) const;

 private:
  Grid1D qgrid_;
  Grid1D pgrid_;
  std::vector<double> values_;
};

/// Bilinear interpolation; any point outside the grid rectangle reads 0.
double interp_bilinear(const Field2D& field, double q, double p);

/// Linear interpolation of samples on a grid; 0 outside.
double interp_linear(std::span<const double> samples, const Grid1D& grid, double x);

}  // namespace wigflow
