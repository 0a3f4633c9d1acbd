#include "wgm/figures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wgm/beam_optics.hpp"
#include "wgm/constants.hpp"
#include "wgm/coupling.hpp"
#include "wgm/parallel.hpp"
#include "wgm/sweep.hpp"

namespace wgm {
namespace {

std::vector<double> lin_space(double a, double b, std::size_t count) {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
  v.back() = b;
  return v;
}

std::vector<double> log_space(double a, double b, std::size_t count) {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    v[i] = std::exp(std::log(a) + t * (std::log(b) - std::log(a)));
  }
  v.front() = a;
  v.back() = b;
  return v;
}

const std::vector<double> kFigureIndices{1.5, 1.7, 1.9};

std::string fmt(double v, int precision = 4) {
  std::ostringstream out;
  out.precision(precision);
  out << v;
  return out.str();
}

/// Max of `column` per value of the `n` column.
std::vector<std::string> max_by_index(const Dataset& d, const std::string& column,
                                      const std::string& arg_column,
                                      const std::string& label) {
  std::vector<std::string> lines;
  for (double n : kFigureIndices) {
    double best = -1.0, arg = 0.0;
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
      if (d.number(r, "n") != n) continue;
      const double v = d.number(r, column);
      if (v > best) {
        best = v;
        arg = d.number(r, arg_column);
      }
    }
    lines.push_back(label + " n=" + fmt(n) + ": max " + column + " = " + fmt(best) +
                    " at " + arg_column + " = " + fmt(arg));
  }
  return lines;
}

FigureResult fig2b(const RunConfig& cfg, unsigned workers) {
  SystemParams p = cfg.params;
  p.sphere.radius_m = 10e-6;
  p.beam.waist_offset_m = 0.0;
  SweepGrid grid;
  grid.axes = {{"n", kFigureIndices}, {"w0", lin_space(0.05e-6, 10e-6, 200)}};
  grid.outputs = {"w_s", "w_s_ratio"};

  FigureResult r;
  r.datasets.push_back({"fig2b", run_sweep(validate(p), grid, cfg.emission, workers)});
  const auto& d = r.datasets.back().data;
  for (double n : kFigureIndices) {
    double best = 1e300, arg = 0.0;
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
      if (d.number(i, "n") != n) continue;
      if (d.number(i, "w_s_m") < best) {
        best = d.number(i, "w_s_m");
        arg = d.number(i, "w0_m");
      }
    }
    r.summary.push_back("fig2b n=" + fmt(n) + ": min w_s = " + fmt(best * 1e6) +
                        " um at w0 = " + fmt(arg * 1e6) + " um; asymptotic ratio |2-n|/n = " +
                        fmt(std::abs(2.0 - n) / n));
  }
  return r;
}

FigureResult fig3(const RunConfig& cfg, unsigned workers) {
  FigureResult r;

  SystemParams rs_base = cfg.params;
  rs_base.sphere.radius_m = 10e-6;
  SweepGrid rs;
  rs.axes = {{"n", kFigureIndices}, {"r_s", log_space(10e-9, 100e-9, 50)}};
  rs.outputs = {"kappa_in", "kappa_R", "kappa_0", "eta"};
  r.datasets.push_back({"fig3_rs", run_sweep(validate(rs_base), rs, cfg.emission, workers)});

  SystemParams R_base = cfg.params;
  R_base.scatterer.radius_m = 50e-9;
  SweepGrid R;
  R.axes = {{"n", kFigureIndices}, {"R", lin_space(5e-6, 30e-6, 50)}};
  R.outputs = {"kappa_in", "kappa_R", "kappa_0", "eta"};
  r.datasets.push_back({"fig3_R", run_sweep(validate(R_base), R, cfg.emission, workers)});

  for (auto& l : max_by_index(r.datasets[0].data, "eta", "r_s_m", "fig3 r_s sweep"))
    r.summary.push_back(std::move(l));
  for (auto& l : max_by_index(r.datasets[1].data, "eta", "R_m", "fig3 R sweep"))
    r.summary.push_back(std::move(l));
  r.summary.push_back("fig3: Q0 = " + fmt(cfg.params.sphere.q0));
  return r;
}

FigureResult fig4(const RunConfig& cfg, unsigned workers) {
  FigureResult r;
  SystemParams rs_base = cfg.params;
  rs_base.sphere.radius_m = 10e-6;
  SweepGrid rs;
  rs.axes = {{"n", kFigureIndices}, {"r_s", log_space(10e-9, 100e-9, 50)}};
  rs.outputs = {"g2", "kappa_out", "Q_out"};
  r.datasets.push_back({"fig4_rs", run_sweep(validate(rs_base), rs, cfg.emission, workers)});

  SystemParams R_base = cfg.params;
  R_base.scatterer.radius_m = 50e-9;
  SweepGrid R;
  R.axes = {{"n", kFigureIndices}, {"R", lin_space(5e-6, 30e-6, 50)}};
  R.outputs = {"g2", "kappa_out", "Q_out"};
  r.datasets.push_back({"fig4_R", run_sweep(validate(R_base), R, cfg.emission, workers)});

  SystemParams ref = rs_base;
  ref.scatterer.radius_m = 50e-9;
  const auto rates = lasing_rates(validate(ref));
  r.summary.push_back("fig4 r_s=50 nm, R=10 um, n=" + fmt(ref.sphere.index) +
                      ": kappa_out = " + fmt(rates.kappa_reservoir) + " rad/s (" +
                      fmt(rad_s_to_hz(rates.kappa_reservoir) / 1e6) + " MHz), Q_out = " +
                      fmt(rates.omega / rates.kappa_reservoir));
  return r;
}

FigureResult fig7(const RunConfig& cfg, unsigned workers) {
  SweepGrid grid;
  grid.axes = {{"phi", {0.0, 90.0}}, {"n", lin_space(1.2, 2.0, 81)}};
  grid.outputs = {"Theta_half"};
  FigureResult r;
  r.datasets.push_back({"fig7", run_sweep(cfg.params, grid, cfg.emission, workers)});
  const auto& d = r.datasets.back().data;
  for (double phi : {0.0, 90.0}) {
    double best = 1e300, arg = 0.0;
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
      if (d.number(i, "phi_deg") != phi) continue;
      if (d.number(i, "Theta_half_deg") < best) {
        best = d.number(i, "Theta_half_deg");
        arg = d.number(i, "n");
      }
    }
    r.summary.push_back("fig7 phi=" + fmt(phi) + " deg: min Theta_half = " + fmt(best) +
                        " deg at n = " + fmt(arg));
  }
  return r;
}

FigureResult fig8(const RunConfig& cfg, unsigned workers) {
  FigureResult r;
  for (double n : {1.5, 1.9}) {
    std::vector<EmissionProfile> profiles;
    for (double phi : {0.0, 90.0}) {
      EmissionOptions opt;
      opt.normalization = cfg.emission.normalization;
      opt.grid_size = cfg.emission.grid_size;
      opt.bin_count = cfg.emission.bin_count > 0 ? cfg.emission.bin_count : 4000;
      opt.workers = workers;
      profiles.push_back(emission_profile(n, phi, opt));
      const auto& p = profiles.back();
      std::string half = p.half_energy_deg ? fmt(*p.half_energy_deg) + " deg" : "undefined";
      r.summary.push_back("fig8 n=" + fmt(n) + " phi=" + fmt(phi) + ": P(0.7) = " +
                          fmt(p.cumulative_at(0.7)) + ", P(11) = " + fmt(p.cumulative_at(11.0)) +
                          ", Theta_half = " + half + " [" +
                          std::string(to_string(p.normalization)) + "]");
    }
    auto data = emission_out_dataset(profiles);
    stamp_provenance(data, cfg.params, cfg.emission);
    data.set_provenance("n", format_number(n));
    r.datasets.push_back({"fig8_n" + fmt(n), std::move(data)});
  }
  return r;
}

}  // namespace

std::optional<Figure> parse_figure(std::string_view name) {
  for (auto f : {Figure::fig2b, Figure::fig3, Figure::fig4, Figure::fig7, Figure::fig8,
                 Figure::spectrum})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

std::string_view to_string(Figure figure) {
  switch (figure) {
    case Figure::fig2b: return "fig2b";
    case Figure::fig3: return "fig3";
    case Figure::fig4: return "fig4";
    case Figure::fig7: return "fig7";
    case Figure::fig8: return "fig8";
    case Figure::spectrum: return "spectrum";
  }
  return "unknown";
}

Dataset spectrum_dataset(const SystemParams& params, std::size_t points,
                         double half_width_linewidths) {
  if (points < 2) throw std::invalid_argument("spectrum needs at least two points");
  const auto beam = lens_transform(params.beam, params.sphere);
  const auto rates = excitation_rates(params, beam.mode_area_m2);
  const double fwhm = 2.0 * rates.kappa_total();
  const double half = half_width_linewidths * fwhm;

  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = rates.omega_eff + (-half + 2.0 * half * t);
  }

  Dataset d;
  d.add_column("omega_rad_s");
  d.add_column("detuning_rad_s");
  d.add_column("transmission");
  for (const auto& s : transmission_spectrum(rates, grid))
    d.add_row({s.omega, s.detuning, s.transmission});
  d.set_provenance("tool_version", std::string(kToolVersion));
  d.set_provenance("Q0", format_number(params.sphere.q0));
  d.set_provenance("f1_0", format_number(params.pump.field_at_scatterer));
  d.set_provenance("omega_eff_rad_s", format_number(rates.omega_eff));
  d.set_provenance("linewidth_fwhm_rad_s", format_number(fwhm));
  return d;
}

Dataset emission_u_dataset(double index, const std::vector<double>& phis_deg,
                           double step_deg) {
  Dataset d;
  d.add_column("theta_deg");
  d.add_column("phi_deg");
  d.add_column("u_per_sr");
  const auto steps = static_cast<std::size_t>(std::llround(360.0 / step_deg));
  for (double phi : phis_deg) {
    for (std::size_t i = 0; i < steps; ++i) {
      const double theta = step_deg * static_cast<double>(i);
      d.add_row({theta, phi, angular_density({theta, phi}, index)});
    }
  }
  d.set_provenance("tool_version", std::string(kToolVersion));
  d.set_provenance("n", format_number(index));
  return d;
}

Dataset emission_out_dataset(const std::vector<EmissionProfile>& profiles) {
  Dataset d;
  for (auto name : {"Theta_deg", "phi_deg", "p_per_deg", "P_cum", "normalization_mode"})
    d.add_column(name);
  for (const auto& p : profiles) {
    const std::string mode(to_string(p.normalization));
    const std::size_t bins = p.density.size();
    for (std::size_t e = 0; e <= bins; ++e) {
      const double density = p.density[std::min(e, bins - 1)];
      d.add_row({p.bin_edges[e], p.phi_deg, density, p.cumulative[e], mode});
    }
  }
  return d;
}

Dataset verification_dataset(const CouplingRates& rates,
                             const std::vector<double>& detunings_in_linewidths) {
  Dataset d;
  for (auto name : {"detuning_rad_s", "closed_form", "time_domain", "relative_error"})
    d.add_column(name);
  const double decay = rates.kappa_total();
  for (double k : detunings_in_linewidths) {
    const double delta = k * decay;
    const double closed = std::norm(transmission_amplitude(rates, rates.omega_eff + delta));
    const double step = 0.05 / std::max(std::abs(delta), decay);
    const auto ss = langevin_time_domain(rates, {rates.omega_eff + delta, 1.0},
                                         40.0 / decay, step);
    const double scale = std::max(closed, 1e-300);
    d.add_row({delta, closed, ss.transmission, std::abs(ss.transmission - closed) / scale});
  }
  d.set_provenance("tool_version", std::string(kToolVersion));
  return d;
}

FigureResult figure_command(Figure figure, const RunConfig& cfg, unsigned workers) {
  switch (figure) {
    case Figure::fig2b: return fig2b(cfg, workers);
    case Figure::fig3: return fig3(cfg, workers);
    case Figure::fig4: return fig4(cfg, workers);
    case Figure::fig7: return fig7(cfg, workers);
    case Figure::fig8: return fig8(cfg, workers);
    case Figure::spectrum: {
      FigureResult r;
      r.datasets.push_back({"spectrum", spectrum_dataset(cfg.params)});
      const auto& d = r.datasets.back().data;
      double tmin = 1.0;
      for (std::size_t i = 0; i < d.rows.size(); ++i)
        tmin = std::min(tmin, d.number(i, "transmission"));
      r.summary.push_back("spectrum: min transmission on grid = " + fmt(tmin, 8));
      return r;
    }
  }
  throw std::invalid_argument("unknown figure");
}

}  // namespace wgm
