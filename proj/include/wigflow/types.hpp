#pragma once

#include <complex>
#include <vector>

#include "wigflow/density.hpp"
#include "wigflow/grid.hpp"

namespace wigflow {

using cplx = std::complex<double>;

/// Position-space wavefunction sampled on a q grid.
struct Wavefunction {
  Grid1D grid;
  std::vector<cplx> amps;
  PhysContext ctx;

  double norm() const;
  /// |psi|^2 on the grid.
  Density1D density() const;
};

/// Momentum-space wavefunction on a p grid.
struct MomentumWavefunction {
  Grid1D grid;
  std::vector<cplx> amps;
  PhysContext ctx;

  double norm() const;
  Density1D density() const;
};

/// Wigner quasiprobability W(q, p) sampled on a phase-space rectangle.
struct WignerField {
  Field2D field;
  PhysContext ctx;
  /// True when the p axis holds exactly one period of the discrete transform;
  /// p integrals then use the periodic trapezoid (rectangle) rule.
  bool periodic_p = false;

  const Grid1D& qgrid() const { return field.qgrid(); }
  const Grid1D& pgrid() const { return field.pgrid(); }
  double total() const;
  double min_value() const;
};

}  // namespace wigflow
