#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "wigflow/analysis.hpp"
#include "wigflow/catalog.hpp"

namespace wigflow::cli {

// Reference computations shared by `verify` and the acceptance run. Each
// returns raw measurements; callers decide the tolerances. `n` is the grid
// size for the states that scale with it; the square wave and the sinc use
// fixed resolutions where their convergence needs it.

inline constexpr std::array<double, 4> kFlowTimes = {0.5, 1.0, 2.0, 5.0};
inline constexpr std::array<double, 4> kAsymptoticTimes = {5.0, 10.0, 20.0, 40.0};
inline constexpr std::size_t kSquareGridN = 2048;
inline constexpr std::size_t kSincMarginalN = 8801;
inline constexpr std::size_t kSincFlowN = 66001;
inline constexpr double kSincAsymptoticB = 32.0;

struct ClosedFormResult {
  double max_error = 0.0;
  double peak = 0.0;
};

/// Gaussian (0, 0, 1) on n + 1 nodes over +-20 with a node at the origin.
ClosedFormResult gaussian_closed_form(std::size_t n, const PhysContext& ctx);

struct SquareOracleResult {
  double max_error = 0.0;
  double max_outside = 0.0;  // max |W| over rows with |q| > a/2
  double min_value = 0.0;
};

SquareOracleResult square_closed_form(const PhysContext& ctx);

struct MarginalErrors {
  double q = 0.0;
  double p = 0.0;
  double total = 0.0;
};

MarginalErrors marginal_errors(CatalogState s, std::size_t n, const PhysContext& ctx);

/// Max over kFlowTimes of the L-infinity gap between the q marginal of the
/// sheared Wigner field and |psi(t)|^2 from exact momentum-space evolution.
double free_flow_error(CatalogState s, std::size_t n, const PhysContext& ctx);

/// Max relative error of the stddev of an evolved (0, 0, 1) Gaussian against
/// the spreading law over 81 times in [-4, 4].
double spreading_error(std::size_t n, const PhysContext& ctx);

struct HgWidthResult {
  double max_rel_error = 0.0;  // over t in {0, 1, 2, 4}
  double energy_ratio = 0.0;   // sigma_p / sigma_q
};

HgWidthResult hg_width_law(const PhysContext& ctx);

struct NegativeFlowResult {
  double argmin = 0.0;
  double t_extremum = 0.0;
  Monotonicity before = Monotonicity::NonMonotonic;
  Monotonicity after = Monotonicity::NonMonotonic;
  double max_direct_gap = 0.0;  // half-plane against evolved-marginal form, |t| <= 3
};

NegativeFlowResult negative_flow(std::size_t n, const PhysContext& ctx);

struct AntisymmetryResult {
  std::string state;
  double max_error = 0.0;  // max over 16 angles of |f(theta) + f(theta + pi) - 1|
  Monotonicity verdict = Monotonicity::NonMonotonic;
};

/// The five catalog states and an equal Gaussian / eigenstate mixture.
std::vector<AntisymmetryResult> antisymmetry(std::size_t n, const PhysContext& ctx);

/// L1 distance of the square-wave marginal from its scaled shape at each of
/// kAsymptoticTimes.
std::array<double, 4> square_asymptotic_l1(const PhysContext& ctx);

/// L1 distance at t = 40 of the freely evolved sinc of width b from the flat
/// profile of width b t / m.
double sinc_asymptotic_l1(double b, const PhysContext& ctx);

/// Max over n <= 3 of the L-infinity change of the eigenstate field under a
/// harmonic rotation by omega t.
double stationarity_error(double omega_t, std::size_t n, const PhysContext& ctx);

/// L1 distance at t = 40 between the evolved bimodal state and the stretched
/// target profile.
double target_profile_l1(const PhysContext& ctx);

}  // namespace wigflow::cli
