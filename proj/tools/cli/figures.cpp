#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "commands.hpp"
#include "output.hpp"
#include "png_writer.hpp"
#include "wigflow/analysis.hpp"
#include "wigflow/catalog.hpp"
#include "wigflow/flows.hpp"
#include "wigflow/wigner.hpp"

namespace wigflow::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  return v;
}

Grid1D figure_qgrid(const RunConfig& cfg) { return make_grid(-0.5 * cfg.q_span, 0.5 * cfg.q_span, cfg.grid_n); }

/// Windowed p grid of grid_n + 1 nodes (one on p = 0) over [-half, half].
Grid1D figure_pgrid(const Grid1D& qgrid, const RunConfig& cfg, double half) {
  return wigner_pgrid(qgrid, cfg.hbar, cfg.grid_n + 1, half);
}

double max_abs(const Field2D& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

class FigureWriter {
 public:
  FigureWriter(int id, const RunConfig& cfg) : cfg_(cfg), manifest_(fmt::format("figure {}", id), cfg) {
    manifest_.params()["figure"] = id;
  }

  nlohmann::ordered_json& params() { return manifest_.params(); }
  std::filesystem::path path(const std::string& name) {
    manifest_.add_file(name);
    files_.push_back(name);
    return cfg_.output_dir / name;
  }

  /// PNG frames of each field plus frames.json, when PNG output is on.
  void frames(const std::vector<double>& times, const std::vector<WignerField>& fields) {
    if (!cfg_.emit_png) return;
    double scale = 0.0;
    for (const auto& f : fields) scale = std::max(scale, max_abs(f.field));
    nlohmann::ordered_json index;
    index["scale"] = scale;
    index["frames"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const auto name = fmt::format("frame_{:03d}.png", k);
      write_field_png(path(name), fields[k].field, scale);
      index["frames"].push_back({{"index", k}, {"t", times[k]}, {"file", name}});
    }
    write_json(path("frames.json"), index);
  }

  std::vector<std::string> finish() {
    files_.push_back("manifest.json");
    manifest_.add_file("manifest.json");
    manifest_.write(cfg_.output_dir);
    return files_;
  }

 private:
  const RunConfig& cfg_;
  Manifest manifest_;
  std::vector<std::string> files_;
};

void gaussian_params(FigureWriter& out, const GaussianParams& g) {
  out.params()["q0"] = g.q0;
  out.params()["p0"] = g.p0;
  out.params()["sigma_q"] = g.sigma_q;
}

// Shear of a moving Gaussian: q marginal shrinks then spreads, p marginal fixed.
std::vector<std::string> figure_shear(const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const auto g = catalog::kGaussian;
  FigureWriter out(1, cfg);
  gaussian_params(out, g);
  const auto qg = figure_qgrid(cfg);
  const auto psi = gaussian_wavefunction(g, qg, ctx);
  const auto w0 = wigner_transform(psi, figure_pgrid(qg, cfg, std::abs(g.p0) + 8.0 * g.sigma_p(ctx)));
  write_field_csv(out.path("wigner_t0.csv"), w0.field, "W");

  const auto times = linspace(-4.0, 4.0, 9);
  out.params()["times"] = times;
  CsvWriter qcsv(out.path("q_marginal.csv"), {"t", "q", "density"});
  CsvWriter pcsv(out.path("p_marginal.csv"), {"t", "p", "density"});
  std::vector<WignerField> fields;
  for (double t : times) {
    auto wt = apply_flow(w0, flow_for(Free{ctx.mass}, t));
    const auto mq = marginal_q_values(wt);
    const auto mp = marginal_p(wt);
    for (std::size_t i = 0; i < mq.size(); ++i) qcsv.row({t, qg[i], mq[i]});
    for (std::size_t k = 0; k < mp.size(); ++k) pcsv.row({t, mp.grid()[k], mp[k]});
    fields.push_back(std::move(wt));
  }
  out.frames(times, fields);
  return out.finish();
}

// Pr(q > q1 | t) by the sheared half-plane and by direct evolution.
std::vector<std::string> figure_negative_flow(const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const auto g = catalog::kGaussian;
  const double q1 = 0.0;
  FigureWriter out(2, cfg);
  gaussian_params(out, g);
  out.params()["q1"] = q1;
  const auto qg = figure_qgrid(cfg);
  const auto psi = gaussian_wavefunction(g, qg, ctx);
  const auto w0 = wigner_transform(psi, figure_pgrid(qg, cfg, std::abs(g.p0) + 8.0 * g.sigma_p(ctx)));

  const auto analytic = [&](double t) {
    const double mean = g.q0 + g.p0 * t / ctx.mass;
    const double sd = gaussian_width(g, ctx.mass, t, ctx);
    return 0.5 * std::erfc((q1 - mean) / (sd * std::numbers::sqrt2));
  };
  CsvWriter prob(out.path("prob_right.csv"), {"t", "half_plane", "direct", "analytic"});
  CsvWriter tangent(out.path("tangent.csv"), {"t", "q_tangent", "p_tangent"});
  for (double t : linspace(-10.0, 10.0, 201)) {
    prob.row({t, prob_right_of(w0, q1, t, ctx.mass), prob_right_of_direct(w0, q1, t, ctx.mass), analytic(t)});
    const auto [tq, tp] = gaussian_tangent_point(g, ctx.mass, t, ctx);
    tangent.row({t, tq, tp});
  }
  out.params()["t_extremum"] = extremum_time(g, q1, ctx.mass, ctx);
  out.params()["t_argmin"] =
      locate_minimum([&](double t) { return prob_right_of(w0, q1, t, ctx.mass); }, -10.0, 10.0, 201);
  return out.finish();
}

// Width of a spreading Gaussian and the tangent point of the sheared line.
std::vector<std::string> figure_spreading(const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const GaussianParams g{0.0, 0.0, 1.0};
  FigureWriter out(3, cfg);
  gaussian_params(out, g);
  const auto qg = figure_qgrid(cfg);
  const auto psi = gaussian_wavefunction(g, qg, ctx);
  const auto fpg = free_evolution_pgrid(qg, ctx.hbar, 2);

  CsvWriter width(out.path("width.csv"), {"t", "analytic", "measured", "q_tangent", "p_tangent"});
  for (double t : linspace(-4.0, 4.0, 81)) {
    const double measured = evolve_free_exact(psi, t, fpg).density().stddev();
    const auto [tq, tp] = gaussian_tangent_point(g, ctx.mass, t, ctx);
    width.row({t, gaussian_width(g, ctx.mass, t, ctx), measured, tq, tp});
  }
  if (cfg.emit_png) {
    const auto w0 = wigner_transform(psi, figure_pgrid(qg, cfg, 8.0 * g.sigma_p(ctx)));
    const auto times = linspace(-4.0, 4.0, 9);
    std::vector<WignerField> fields;
    for (double t : times) fields.push_back(apply_flow(w0, flow_for(Free{ctx.mass}, t)));
    out.frames(times, fields);
  }
  return out.finish();
}

// Marginal of the sheared field against integrals along back-sheared lines.
std::vector<std::string> figure_equivalence(const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const auto g = catalog::kGaussian;
  FigureWriter out(4, cfg);
  gaussian_params(out, g);
  const auto qg = figure_qgrid(cfg);
  const auto psi = gaussian_wavefunction(g, qg, ctx);
  const auto w0 = wigner_transform(psi, figure_pgrid(qg, cfg, std::abs(g.p0) + 8.0 * g.sigma_p(ctx)));
  const auto closed = gaussian_wigner(g, ctx);
  const double reach = 10.0 * g.sigma_q;

  const std::vector<double> times = {1.0, 2.0, 4.0};
  out.params()["times"] = times;
  CsvWriter csv(out.path("equivalence.csv"), {"t", "q", "sheared_field", "line_integral", "analytic"});
  for (double t : times) {
    const auto mq = marginal_q_values(apply_flow(w0, flow_for(Free{ctx.mass}, t)));
    const double mean = g.q0 + g.p0 * t / ctx.mass;
    const double sd = gaussian_width(g, ctx.mass, t, ctx);
    for (std::size_t i = 0; i < qg.size(); ++i) {
      const double z = (qg[i] - mean) / sd;
      const double exact = std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * kPi));
      const double line = sheared_line_marginal(closed, SupportAxis::Q, g.q0 - reach, g.q0 + reach, qg[i], t, ctx.mass);
      csv.row({t, qg[i], mq[i], line, exact});
    }
  }
  return out.finish();
}

// Square-wave Wigner function and its p marginal.
std::vector<std::string> figure_square_wave(const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const double a = catalog::kSquareWidth;
  FigureWriter out(5, cfg);
  out.params()["a"] = a;
  const auto qg = catalog_qgrid(CatalogState::SquareWave, cfg.grid_n, ctx);
  const auto psi = square_wave(a, qg, ctx);
  const auto w = wigner_transform(psi, figure_pgrid(qg, cfg, 8.0 * kPi * ctx.hbar / a));
  const auto closed = square_wave_wigner(a, ctx);

  {
    CsvWriter csv(out.path("wigner.csv"), {"q", "p", "W", "W_closed_form"});
    for (std::size_t i = 0; i < w.field.rows(); ++i) {
      for (std::size_t k = 0; k < w.field.cols(); ++k) {
        const double q = qg[i];
        const double p = w.pgrid()[k];
        csv.row({q, p, w.field(i, k), closed(q, p)});
      }
    }
  }
  {
    const auto mp = marginal_p(w);
    CsvWriter csv(out.path("p_marginal.csv"), {"p", "numeric", "closed_form", "scaled_shape"});
    for (std::size_t k = 0; k < mp.size(); ++k) {
      const double p = mp.grid()[k];
      csv.row({p, mp[k], square_wave_p_marginal(a, p, ctx), (a / ctx.hbar) * shape_f(a * p / ctx.hbar)});
    }
  }
  {
    const auto mq = marginal_q(w);
    const auto d = psi.density();
    CsvWriter csv(out.path("q_marginal.csv"), {"q", "numeric", "density"});
    for (std::size_t i = 0; i < mq.size(); ++i) csv.row({qg[i], mq[i], d[i]});
  }
  out.params()["min_W"] = w.min_value();
  out.frames({0.0}, {w});
  return out.finish();
}

// Free spreading of the n = 2 oscillator eigenstate against the width law.
std::vector<std::string> figure_hermite_gauss(const RunConfig& cfg) {
  const auto ctx = cfg.ctx();
  const int n = catalog::kHermiteOrder;
  const double omega = catalog::kHermiteOmega;
  FigureWriter out(6, cfg);
  out.params()["n"] = n;
  out.params()["omega"] = omega;
  const auto qg = figure_qgrid(cfg);
  const auto psi = hermite_gauss(n, omega, qg, ctx);
  const auto fpg = free_evolution_pgrid(qg, ctx.hbar, 2);
  const double h0 = half_iqr(psi.density());

  CsvWriter csv(out.path("width_hg.csv"), {"t", "law", "measured_half_iqr"});
  for (double t : linspace(-4.0, 4.0, 81)) {
    csv.row({t, width_law_hg(h0, omega, t), half_iqr(evolve_free_exact(psi, t, fpg).density())});
  }
  out.params()["energy_ratio"] = hg_energy_ratio(n, omega, ctx.mass, ctx);
  out.params()["m_omega"] = ctx.mass * omega;
  if (cfg.emit_png) {
    const double pmax = 8.0 * std::sqrt(ctx.hbar * ctx.mass * omega);
    const auto w0 = wigner_transform(psi, figure_pgrid(qg, cfg, pmax));
    const auto times = linspace(-4.0, 4.0, 9);
    std::vector<WignerField> fields;
    for (double t : times) fields.push_back(apply_flow(w0, flow_for(Free{ctx.mass}, t)));
    out.frames(times, fields);
  }
  return out.finish();
}

}  // namespace

std::vector<std::string> cmd_figure(int id, const RunConfig& cfg) {
  switch (id) {
    case 1: return figure_shear(cfg);
    case 2: return figure_negative_flow(cfg);
    case 3: return figure_spreading(cfg);
    case 4: return figure_equivalence(cfg);
    case 5: return figure_square_wave(cfg);
    case 6: return figure_hermite_gauss(cfg);
    default: throw UsageError(fmt::format("unknown figure {}; expected 1..6", id));
  }
}

}  // namespace wigflow::cli
