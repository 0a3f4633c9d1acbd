#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wgm/config.hpp"
#include "wgm/dataset.hpp"
#include "wgm/emission.hpp"
#include "wgm/spectral.hpp"

namespace wgm {

enum class Figure { fig2b, fig3, fig4, fig7, fig8, spectrum };

std::optional<Figure> parse_figure(std::string_view name);
std::string_view to_string(Figure figure);

struct NamedDataset {
  std::string name;  // file stem, e.g. "fig3_rs"
  Dataset data;
};

struct FigureResult {
  std::vector<NamedDataset> datasets;
  std::vector<std::string> summary;  // human-readable lines for stdout
};

/// Regenerates the datasets behind one figure preset. Axis ranges are pinned
/// by the preset; everything else comes from `cfg`.
FigureResult figure_command(Figure figure, const RunConfig& cfg,
                            unsigned workers = 0);

/// Transmission of the pumped mode over ±half_width linewidths (FWHM) about
/// ω_eff. Header: omega_rad_s, detuning_rad_s, transmission.
Dataset spectrum_dataset(const SystemParams& params, std::size_t points = 2001,
                         double half_width_linewidths = 10.0);

/// u(θ, φ) on a θ grid over [0°, 360°). Header: theta_deg, phi_deg, u_per_sr.
Dataset emission_u_dataset(double index, const std::vector<double>& phis_deg,
                           double step_deg = 1.0);

/// p(Θ) and P(Θ) per bin edge of each profile.
/// Header: Theta_deg, phi_deg, p_per_deg, P_cum, normalization_mode.
Dataset emission_out_dataset(const std::vector<EmissionProfile>& profiles);

/// Time-domain oracle against the closed-form transmission at a set of
/// detunings (in units of κ_total). Header: detuning_rad_s,
/// closed_form, time_domain, relative_error.
Dataset verification_dataset(const CouplingRates& rates,
                             const std::vector<double>& detunings_in_linewidths);

}  // namespace wgm
