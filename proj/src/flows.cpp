#include "wigflow/flows.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wigflow/errors.hpp"
#include "wigflow/quadrature.hpp"
#include "wigflow/wigner.hpp"

namespace wigflow {

namespace {

constexpr double kDetTolerance = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_mass(double m) {
  if (!(m > 0.0)) throw DomainError("Hamiltonian mass must be positive");
}

}  // namespace

std::array<double, 2> AffineFlow::apply(double q, double p) const {
  return {matrix[0] * q + matrix[1] * p + shift[0], matrix[2] * q + matrix[3] * p + shift[1]};
}

AffineFlow AffineFlow::inverse() const {
  const double d = det();
  AffineFlow inv;
  inv.matrix = {matrix[3] / d, -matrix[1] / d, -matrix[2] / d, matrix[0] / d};
  inv.shift = {-(inv.matrix[0] * shift[0] + inv.matrix[1] * shift[1]),
               -(inv.matrix[2] * shift[0] + inv.matrix[3] * shift[1])};
  return inv;
}

bool AffineFlow::is_identity() const {
  return matrix == std::array<double, 4>{1.0, 0.0, 0.0, 1.0} && shift == std::array<double, 2>{0.0, 0.0};
}

AffineFlow flow_for(const QuadraticHamiltonian& h, double t) {
  return std::visit(
      overloaded{
          [t](const Free& f) {
            require_mass(f.mass);
            AffineFlow flow;
            flow.matrix = {1.0, t / f.mass, 0.0, 1.0};
            return flow;
          },
          // Exact characteristics dq/dt = p/m, dp/dt = F: the kinetic shear
          // term t/m is kept alongside the parabolic translation.
          [t](const ConstantForce& c) {
            require_mass(c.mass);
            AffineFlow flow;
            flow.matrix = {1.0, t / c.mass, 0.0, 1.0};
            flow.shift = {c.force * t * t / (2.0 * c.mass), c.force * t};
            return flow;
          },
          [t](const Harmonic& o) {
            require_mass(o.mass);
            if (!(o.omega > 0.0)) throw DomainError("Harmonic: omega must be positive");
            const double c = std::cos(o.omega * t);
            const double s = std::sin(o.omega * t);
            const double mw = o.mass * o.omega;
            AffineFlow flow;
            flow.matrix = {c, s / mw, -mw * s, c};
            return flow;
          },
      },
      h);
}

AffineFlow compose(const AffineFlow& f, const AffineFlow& g) {
  const auto& A = f.matrix;
  const auto& B = g.matrix;
  AffineFlow out;
  out.matrix = {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3], A[2] * B[0] + A[3] * B[2],
                A[2] * B[1] + A[3] * B[3]};
  out.shift = {A[0] * g.shift[0] + A[1] * g.shift[1] + f.shift[0],
               A[2] * g.shift[0] + A[3] * g.shift[1] + f.shift[1]};
  return out;
}

WignerField apply_flow(const WignerField& w, const AffineFlow& flow, const Grid1D& qgrid, const Grid1D& pgrid) {
  if (std::abs(flow.det() - 1.0) > kDetTolerance) {
    throw SymplecticError("apply_flow: flow determinant " + std::to_string(flow.det()) + " is not 1");
  }
  if (flow.is_identity() && qgrid.same_as(w.qgrid(), 0.0) && pgrid.same_as(w.pgrid(), 0.0)) return w;

  const AffineFlow back = flow.inverse();
  WignerField out{Field2D(qgrid, pgrid), w.ctx};
  const long rows = static_cast<long>(qgrid.size());
#pragma omp parallel for schedule(static)
  for (long ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    auto row = out.field.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      const auto z = back.apply(qgrid[i], pgrid[k]);
      row[k] = interp_bilinear(w.field, z[0], z[1]);
    }
  }
  return out;
}

WignerField apply_flow(const WignerField& w, const AffineFlow& flow) {
  return apply_flow(w, flow, w.qgrid(), w.pgrid());
}

Grid1D free_evolution_pgrid(const Grid1D& qgrid, double hbar, std::size_t oversample) {
  if (oversample == 0) throw InputError("free_evolution_pgrid: oversample must be positive");
  const std::size_t n = qgrid.size() * oversample;
  const double dp = 2.0 * std::numbers::pi * hbar / (static_cast<double>(n) * qgrid.spacing());
  const double pmin = -static_cast<double>(n / 2) * dp;
  return make_grid(pmin, pmin + static_cast<double>(n - 1) * dp, n);
}

Wavefunction evolve_free_exact(const Wavefunction& psi, double t, const Grid1D& pgrid) {
  psi.ctx.validate();
  auto phi = momentum_representation(psi, pgrid);
  const double k = t / (2.0 * psi.ctx.mass * psi.ctx.hbar);
  for (std::size_t j = 0; j < phi.amps.size(); ++j) {
    const double p = pgrid[j];
    phi.amps[j] *= std::polar(1.0, -k * p * p);
  }
  return position_representation(phi, psi.grid);
}

cplx free_amplitude(const std::function<cplx(double)>& phi, double p_lo, double p_hi, double q, double t,
                    const PhysContext& ctx) {
  ctx.validate();
  if (!(p_hi > p_lo)) throw InputError("free_amplitude: empty momentum support");
  const double hbar = ctx.hbar;
  const double alpha = t / (2.0 * ctx.mass * hbar);
  // Phase derivative (q - p t/m) / hbar, bounded over the support.
  const double rate = std::max(std::abs(q / hbar - 2.0 * alpha * p_lo), std::abs(q / hbar - 2.0 * alpha * p_hi));
  const double turns = rate * (p_hi - p_lo) / (2.0 * std::numbers::pi);
  const auto panels = static_cast<std::size_t>(std::clamp(2.0 * turns, 16.0, 1e6));
  const auto integrand = [&](double p) { return phi(p) * std::polar(1.0, (p * q / hbar) - alpha * p * p); };
  const cplx total = gauss_legendre(integrand, p_lo, p_hi, panels);
  return total / std::sqrt(2.0 * std::numbers::pi * hbar);
}

}  // namespace wigflow
