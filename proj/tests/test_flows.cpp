#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "wigflow/catalog.hpp"
#include "wigflow/errors.hpp"
#include "wigflow/flows.hpp"
#include "wigflow/wigner.hpp"

using namespace wigflow;

namespace {

constexpr double kPi = std::numbers::pi;
const PhysContext kUnit{};

void expect_flow_near(const AffineFlow& a, const AffineFlow& b, double tol) {
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(a.matrix[k], b.matrix[k], tol) << "matrix entry " << k;
  for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(a.shift[k], b.shift[k], tol) << "shift entry " << k;
}

QuadraticHamiltonian random_hamiltonian(std::mt19937& rng) {
  std::uniform_real_distribution<double> pos(0.3, 3.0), any(-2.0, 2.0);
  switch (rng() % 3) {
    case 0: return Free{pos(rng)};
    case 1: return ConstantForce{pos(rng), any(rng)};
    default: return Harmonic{pos(rng), pos(rng)};
  }
}

double max_gap(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(FlowFor, Examples) {
  expect_flow_near(flow_for(Free{1.0}, 0.0), AffineFlow::identity(), 0.0);
  expect_flow_near(flow_for(Harmonic{1.0, 1.0}, 2.0 * kPi), AffineFlow::identity(), 1e-12);
  const auto shear = flow_for(Free{1.0}, 2.0);
  EXPECT_EQ(shear.matrix, (std::array<double, 4>{1.0, 2.0, 0.0, 1.0}));
  EXPECT_EQ(shear.shift, (std::array<double, 2>{0.0, 0.0}));
}

TEST(FlowFor, ConstantForceFollowsCharacteristics) {
  const ConstantForce h{2.0, 0.6};
  const double t = 1.7;
  const auto f = flow_for(h, t);
  const auto [q, p] = f.apply(0.4, -0.3);
  EXPECT_NEAR(p, -0.3 + h.force * t, 1e-14);
  EXPECT_NEAR(q, 0.4 - 0.3 * t / h.mass + 0.5 * h.force * t * t / h.mass, 1e-14);
}

TEST(FlowFor, HarmonicSolvesEquationsOfMotion) {
  const Harmonic h{1.5, 2.0};
  const double t = 0.37;
  const auto [q, p] = flow_for(h, t).apply(1.0, 0.0);
  EXPECT_NEAR(q, std::cos(h.omega * t), 1e-14);
  EXPECT_NEAR(p, -h.mass * h.omega * std::sin(h.omega * t), 1e-14);
}

TEST(FlowFor, AreaPreservingForRandomHamiltonians) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> time(-10.0, 10.0);
  for (int k = 0; k < 200; ++k) EXPECT_NEAR(flow_for(random_hamiltonian(rng), time(rng)).det(), 1.0, 1e-12);
}

TEST(Compose, IdentityGroupAndInverse) {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> time(-5.0, 5.0);
  for (int k = 0; k < 50; ++k) {
    const auto h = random_hamiltonian(rng);
    const double t1 = time(rng), t2 = time(rng);
    const auto f = flow_for(h, t1);
    expect_flow_near(compose(f, AffineFlow::identity()), f, 0.0);
    expect_flow_near(compose(f, f.inverse()), AffineFlow::identity(), 1e-10);
    expect_flow_near(compose(f, flow_for(h, t2)), flow_for(h, t1 + t2), 1e-10);
  }
  expect_flow_near(compose(flow_for(Free{1.0}, 0.3), flow_for(Free{1.0}, 1.1)), flow_for(Free{1.0}, 1.4), 1e-12);
  const auto f = flow_for(Harmonic{1.0, 1.0}, 0.5);
  const auto g = flow_for(Free{2.0}, 1.5);
  const auto [q1, p1] = compose(f, g).apply(0.3, -0.8);
  const auto [qg, pg] = g.apply(0.3, -0.8);
  const auto [q2, p2] = f.apply(qg, pg);
  EXPECT_NEAR(q1, q2, 1e-14);
  EXPECT_NEAR(p1, p2, 1e-14);
}

TEST(ApplyFlow, IdentityIsBitwiseCopy) {
  const auto qg = make_grid(-12.0, 12.0, 128);
  const auto w = wigner_transform(gaussian_wavefunction({0.0, 0.0, 1.0}, qg, kUnit), wigner_pgrid(qg, 1.0));
  const auto same = apply_flow(w, AffineFlow::identity());
  EXPECT_EQ(same.field.values(), w.field.values());
}

TEST(ApplyFlow, RejectsNonSymplecticMaps) {
  const auto qg = make_grid(-12.0, 12.0, 128);
  const auto w = wigner_transform(gaussian_wavefunction({0.0, 0.0, 1.0}, qg, kUnit), wigner_pgrid(qg, 1.0));
  AffineFlow stretch;
  stretch.matrix = {2.0, 0.0, 0.0, 1.0};
  EXPECT_THROW(apply_flow(w, stretch), SymplecticError);
}

TEST(ApplyFlow, FreeShearKeepsMomentumMarginal) {
  const auto qg = make_grid(-20.0, 20.0, 512);
  const auto w = wigner_transform(gaussian_wavefunction({-1.0, 1.0, 1.0}, qg, kUnit), wigner_pgrid(qg, 1.0));
  for (double t : {-3.0, 1.0, 4.0}) {
    const auto moved = apply_flow(w, flow_for(Free{1.0}, t));
    EXPECT_LT(max_gap(marginal_p(moved).values(), marginal_p(w).values()), 1e-5);
  }
}

TEST(ApplyFlow, ConstantForceMean) {
  const GaussianParams g{-1.0, 1.0, 1.0};
  const auto qg = make_grid(-20.0, 20.0, 512);
  const auto w = wigner_transform(gaussian_wavefunction(g, qg, kUnit), wigner_pgrid(qg, 1.0));
  const ConstantForce h{1.0, 0.5};
  for (double t : {0.5, 1.0, 2.0}) {
    const double expected = g.q0 + g.p0 * t / h.mass + 0.5 * h.force * t * t / h.mass;
    EXPECT_NEAR(marginal_q(apply_flow(w, flow_for(h, t))).mean(), expected, 1e-4);
  }
}

TEST(ApplyFlow, TotalPreservedAndConverges) {
  // Parameters are drawn so the moved support stays inside the grid.
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> time(-1.0, 1.0), mass(0.8, 1.25), omega(0.5, 1.0);
  const auto qg = make_grid(-15.0, 15.0, 256);
  const auto w = wigner_transform(hermite_gauss(1, 1.0, qg, kUnit), wigner_pgrid(qg, 1.0, 257, 8.0));
  for (int k = 0; k < 5; ++k) {
    EXPECT_NEAR(apply_flow(w, flow_for(Free{mass(rng)}, time(rng))).total(), w.total(), 1e-3);
    EXPECT_NEAR(apply_flow(w, flow_for(Harmonic{mass(rng), omega(rng)}, 2.0 * time(rng))).total(), w.total(), 1e-3);
  }
  // Rotation error roughly quarters when the grid spacing halves.
  const auto err = [](std::size_t n) {
    const auto g = centered_grid(0.0, 12.0 / static_cast<double>(n - 1), n);
    const auto f = wigner_transform(hermite_gauss(2, 1.0, g, kUnit), wigner_pgrid(g, 1.0, n, 6.0));
    return max_gap(apply_flow(f, flow_for(Harmonic{1.0, 1.0}, kPi / 4.0)).field.values(), f.field.values());
  };
  const double coarse = err(201), fine = err(401);
  EXPECT_LT(fine, 0.6 * coarse);
}

TEST(ApplyFlow, HarmonicStationaryStates) {
  const auto qg = centered_grid(0.0, 0.02, 701);
  const auto pg = wigner_pgrid(qg, 1.0, 701, 7.0);
  for (int n = 0; n <= 3; ++n) {
    const auto w = wigner_transform(hermite_gauss(n, 1.0, qg, kUnit), pg);
    for (double wt : {kPi / 4.0, kPi / 2.0, kPi}) {
      EXPECT_LT(max_gap(apply_flow(w, flow_for(Harmonic{1.0, 1.0}, wt)).field.values(), w.field.values()), 1e-3)
          << "n=" << n << " wt=" << wt;
    }
  }
}

TEST(EvolveFreeExact, IdentityAtZeroAndNormPreserved) {
  const auto qg = make_grid(-20.0, 20.0, 512);
  const auto psi = gaussian_wavefunction({-1.0, 1.0, 1.0}, qg, kUnit);
  const auto pg = free_evolution_pgrid(qg, 1.0, 2);
  const auto same = evolve_free_exact(psi, 0.0, pg);
  for (std::size_t k = 0; k < qg.size(); ++k) EXPECT_NEAR(std::abs(same.amps[k] - psi.amps[k]), 0.0, 1e-12);
  EXPECT_NEAR(evolve_free_exact(psi, 3.0, pg).norm(), 1.0, 1e-8);
}

TEST(EvolveFreeExact, GaussianSpreading) {
  const auto qg = make_grid(-20.0, 20.0, 512);
  const auto psi = gaussian_wavefunction({0.0, 0.0, 1.0}, qg, kUnit);
  EXPECT_NEAR(evolve_free_exact(psi, 2.0, free_evolution_pgrid(qg, 1.0, 2)).density().stddev(), std::sqrt(2.0), 1e-4);
}

TEST(EvolveFreeExact, AgreesWithShearedWignerMarginal) {
  const auto qg = make_grid(-20.0, 20.0, 512);
  const auto psi = gaussian_wavefunction({-1.0, 1.0, 1.0}, qg, kUnit);
  const auto w = wigner_transform(psi, wigner_pgrid(qg, 1.0));
  const auto pg = free_evolution_pgrid(qg, 1.0, 2);
  for (double t : {0.5, 1.0, 2.0, 5.0}) {
    const auto mq = marginal_q_values(apply_flow(w, flow_for(Free{1.0}, t)));
    EXPECT_LT(max_gap(mq, evolve_free_exact(psi, t, pg).density().values()), 1e-3) << "t=" << t;
  }
}

TEST(FreeAmplitude, MatchesExactEvolutionOfGaussian) {
  const GaussianParams g{0.0, 0.5, 1.0};
  const double sp = g.sigma_p(kUnit);
  const auto phi = [&](double p) {
    const double z = (p - g.p0) / sp;
    return cplx(std::exp(-0.25 * z * z) / std::sqrt(sp * std::sqrt(2.0 * kPi)), 0.0);
  };
  const double t = 3.0;
  const double width = std::sqrt(1.0 + std::pow(t / 2.0, 2));
  for (double q : {-3.0, 0.0, 1.5, 4.0}) {
    const double rho = std::norm(free_amplitude(phi, g.p0 - 12.0 * sp, g.p0 + 12.0 * sp, q, t, kUnit));
    const double z = (q - g.p0 * t) / width;
    EXPECT_NEAR(rho, std::exp(-0.5 * z * z) / (width * std::sqrt(2.0 * kPi)), 1e-10);
  }
}
