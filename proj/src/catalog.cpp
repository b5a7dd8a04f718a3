#include "wigflow/catalog.hpp"

#include <cmath>
#include <numbers>

#include "wigflow/errors.hpp"

namespace wigflow {

const char* to_string(CatalogState s) {
  switch (s) {
    case CatalogState::Gaussian: return "gaussian";
    case CatalogState::HermiteGauss: return "hermite_gauss_2";
    case CatalogState::SquareWave: return "square_wave";
    case CatalogState::Sinc: return "sinc";
    case CatalogState::Bimodal: return "bimodal";
  }
  return "unknown";
}

Density1D bimodal_target(const Grid1D& pgrid) {
  const double s = catalog::kBimodalSigma;
  const double norm = 1.0 / (s * std::sqrt(2.0 * std::numbers::pi));
  std::vector<double> v(pgrid.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double lo = (pgrid[k] + catalog::kBimodalCenter) / s;
    const double hi = (pgrid[k] - catalog::kBimodalCenter) / s;
    v[k] = 0.5 * norm * (std::exp(-0.5 * lo * lo) + std::exp(-0.5 * hi * hi));
  }
  return Density1D(pgrid, std::move(v));
}

Grid1D bimodal_target_grid() { return make_grid(-8.0, 8.0, 1601); }

Grid1D catalog_qgrid(CatalogState s, std::size_t n, const PhysContext& ctx) {
  ctx.validate();
  switch (s) {
    case CatalogState::Gaussian: return make_grid(-20.0, 20.0, n);
    case CatalogState::HermiteGauss: {
      const double length = std::sqrt(ctx.hbar / (ctx.mass * catalog::kHermiteOmega));
      return make_grid(-12.0 * length, 12.0 * length, n);
    }
    case CatalogState::SquareWave: {
      const auto nodes = 2 * static_cast<std::size_t>(std::lround(0.2 * static_cast<double>(n)));
      return square_wave_grid(catalog::kSquareWidth, n, nodes);
    }
    case CatalogState::Sinc: {
      // Tail mass 2/(pi X) beyond |b q / 2 hbar| = X; X >= 6600 keeps it under
      // 1e-4. The ends sit on zeros of the sinc.
      const double x_end = std::numbers::pi * std::ceil(6600.0 / std::numbers::pi);
      const double half = x_end * 2.0 * ctx.hbar / catalog::kSincWidth;
      return make_grid(-half, half, n);
    }
    case CatalogState::Bimodal: return make_grid(-14.0 * ctx.hbar, 14.0 * ctx.hbar, n);
  }
  throw InputError("catalog_qgrid: unknown state");
}

Wavefunction make_catalog_state(CatalogState s, const Grid1D& qgrid, const PhysContext& ctx) {
  switch (s) {
    case CatalogState::Gaussian: return gaussian_wavefunction(catalog::kGaussian, qgrid, ctx);
    case CatalogState::HermiteGauss:
      return hermite_gauss(catalog::kHermiteOrder, catalog::kHermiteOmega, qgrid, ctx);
    case CatalogState::SquareWave: return square_wave(catalog::kSquareWidth, qgrid, ctx);
    case CatalogState::Sinc: return sinc_wave(catalog::kSincWidth, qgrid, ctx);
    case CatalogState::Bimodal: {
      const auto rho = bimodal_target(bimodal_target_grid());
      return state_from_target_profile(rho, std::nullopt, qgrid, ctx);
    }
  }
  throw InputError("make_catalog_state: unknown state");
}

}  // namespace wigflow
