#pragma once

#include <array>
#include <cstddef>

#include "wigflow/states.hpp"

namespace wigflow {

/// The reference states used by the verification suites.
enum class CatalogState { Gaussian, HermiteGauss, SquareWave, Sinc, Bimodal };

inline constexpr std::array<CatalogState, 5> kCatalog = {CatalogState::Gaussian, CatalogState::HermiteGauss,
                                                         CatalogState::SquareWave, CatalogState::Sinc,
                                                         CatalogState::Bimodal};

namespace catalog {

inline constexpr GaussianParams kGaussian{-1.0, 1.0, 1.0};
inline constexpr int kHermiteOrder = 2;
inline constexpr double kHermiteOmega = 1.0;
inline constexpr double kSquareWidth = 1.3;
inline constexpr double kSincWidth = 1.0;
inline constexpr double kBimodalCenter = 1.5;
inline constexpr double kBimodalSigma = 0.5;

}  // namespace catalog

const char* to_string(CatalogState s);

/// Momentum density 1/2 N(-1.5, 0.5^2) + 1/2 N(1.5, 0.5^2) on pgrid.
Density1D bimodal_target(const Grid1D& pgrid);

/// p grid on which bimodal_target is handed to state_from_target_profile.
Grid1D bimodal_target_grid();

/// A q grid of n nodes suited to the state: +-20 for the Gaussian, +-12
/// oscillator lengths for the eigenstate, an edge-aligned grid covering about
/// +-1.25 a for the square wave, enough width for the sinc tail limit, and
/// +-14 hbar for the bimodal state.
Grid1D catalog_qgrid(CatalogState s, std::size_t n, const PhysContext& ctx);

Wavefunction make_catalog_state(CatalogState s, const Grid1D& qgrid, const PhysContext& ctx);

}  // namespace wigflow
