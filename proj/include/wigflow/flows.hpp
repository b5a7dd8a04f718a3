#pragma once

#include <array>
#include <functional>
#include <variant>

#include "wigflow/types.hpp"

namespace wigflow {

struct Free {
  double mass = 1.0;
};
struct ConstantForce {
  double mass = 1.0;
  double force = 0.0;
};
struct Harmonic {
  double mass = 1.0;
  double omega = 1.0;
};

/// The quadratic Hamiltonians whose Wigner evolution is a classical flow.
using QuadraticHamiltonian = std::variant<Free, ConstantForce, Harmonic>;

/// Area-preserving affine map z -> A z + b on z = (q, p).
struct AffineFlow {
  std::array<double, 4> matrix{1.0, 0.0, 0.0, 1.0};  // row-major a11 a12 a21 a22
  std::array<double, 2> shift{0.0, 0.0};

  static AffineFlow identity() { return {}; }

  double det() const { return matrix[0] * matrix[3] - matrix[1] * matrix[2]; }
  std::array<double, 2> apply(double q, double p) const;
  /// Exact inverse map, using the 2x2 adjugate.
  AffineFlow inverse() const;
  bool is_identity() const;
};

/// Forward-time classical flow of Hamilton's equations for H over time t.
AffineFlow flow_for(const QuadraticHamiltonian& h, double t);

/// (f o g)(z) = f(g(z)).
AffineFlow compose(const AffineFlow& f, const AffineFlow& g);

/// Pulls W back along the flow: W_new(z) = W_old(flow^{-1}(z)) by bilinear
/// interpolation, reading 0 outside the grid. Throws SymplecticError if
/// |det A - 1| > 1e-9.
WignerField apply_flow(const WignerField& w, const AffineFlow& flow);

/// As above, with the result sampled on a different rectangle.
WignerField apply_flow(const WignerField& w, const AffineFlow& flow, const Grid1D& qgrid, const Grid1D& pgrid);

/// Exact free evolution: the momentum amplitude on pgrid is multiplied by
/// exp(-i p^2 t / (2 m hbar)) and transformed back onto psi's grid. pgrid
/// should be the reciprocal lattice of psi's grid or finer.
Wavefunction evolve_free_exact(const Wavefunction& psi, double t, const Grid1D& pgrid);

/// psi(t, q) for a state given by a momentum amplitude phi supported on
/// [p_lo, p_hi], by Gauss-Legendre quadrature of
/// (2 pi hbar)^{-1/2} * integral phi(p) exp(i (p q - p^2 t / 2m) / hbar) dp
/// with panels sized to the phase variation.
cplx free_amplitude(const std::function<cplx(double)>& phi, double p_lo, double p_hi, double q, double t,
                    const PhysContext& ctx);

/// Reciprocal p grid of psi's q grid refined `oversample` times, so that the
/// periodic images of the evolved state sit oversample spans apart.
Grid1D free_evolution_pgrid(const Grid1D& qgrid, double hbar, std::size_t oversample = 1);

}  // namespace wigflow
