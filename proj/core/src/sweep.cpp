#include "wgm/sweep.hpp"

#include <algorithm>
#include <optional>

#include "wgm/beam_optics.hpp"
#include "wgm/constants.hpp"
#include "wgm/coupling.hpp"
#include "wgm/emission.hpp"
#include "wgm/parallel.hpp"
#include "wgm/spectral.hpp"

namespace wgm {
namespace {

enum class Shape { rate, plain };

struct OutputSpec {
  std::string_view name;
  Shape shape;
  std::string_view column;  // for plain outputs
};

constexpr OutputSpec kOutputs[] = {
    {"g1", Shape::rate, ""},
    {"kappa_in", Shape::rate, ""},
    {"kappa_R", Shape::rate, ""},
    {"kappa_0", Shape::rate, ""},
    {"kappa_total", Shape::rate, ""},
    {"g2", Shape::rate, ""},
    {"kappa_out", Shape::rate, ""},
    {"eta", Shape::plain, "eta"},
    {"T_min", Shape::plain, "T_min"},
    {"Q_out", Shape::plain, "Q_out"},
    {"alpha", Shape::plain, "alpha_m3"},
    {"V1", Shape::plain, "V1_m3"},
    {"V2", Shape::plain, "V2_m3"},
    {"F", Shape::plain, "F_m"},
    {"w0_prime", Shape::plain, "w0_prime_m"},
    {"s_prime", Shape::plain, "s_prime_m"},
    {"z_R", Shape::plain, "z_R_m"},
    {"z_R_prime", Shape::plain, "z_R_prime_m"},
    {"w_s", Shape::plain, "w_s_m"},
    {"A_s", Shape::plain, "A_s_m2"},
    {"w_s_ratio", Shape::plain, "w_s_over_w0"},
    {"theta_c", Shape::plain, "theta_c_deg"},
    {"Theta_half", Shape::plain, "Theta_half_deg"},
    {"P_saturation", Shape::plain, "P_saturation"},
};

const OutputSpec& spec_for(std::string_view name) {
  for (const auto& o : kOutputs)
    if (o.name == name) return o;
  throw std::invalid_argument("unknown output " + std::string(name));
}

/// Per-point lazily computed intermediate results.
class PointEvaluator {
 public:
  PointEvaluator(const SystemParams& params, const EmissionSettings& emission)
      : params_(params), emission_(emission) {}

  double value(std::string_view output) {
    const auto& d = params_.derived;
    if (output == "g1") return pump().g_self;
    if (output == "kappa_in") return pump().kappa_in;
    if (output == "kappa_R") return pump().kappa_reservoir;
    if (output == "kappa_0") return pump().kappa_0;
    if (output == "kappa_total") return pump().kappa_total();
    if (output == "g2") return lasing().g_self;
    if (output == "kappa_out") return lasing().kappa_reservoir;
    if (output == "eta") return excitation_efficiency(pump());
    if (output == "T_min") return t_min(pump());
    if (output == "Q_out") return lasing().omega / lasing().kappa_reservoir;
    if (output == "alpha") return d.polarizability;
    if (output == "V1") return d.volume_pump;
    if (output == "V2") return d.volume_lasing;
    if (output == "F") return beam().focal_length_m;
    if (output == "w0_prime") return beam().waist_m;
    if (output == "s_prime") return beam().waist_position_m;
    if (output == "z_R") return beam().rayleigh_range_m;
    if (output == "z_R_prime") return beam().rayleigh_range_out_m;
    if (output == "w_s") return beam().spot_radius_m;
    if (output == "A_s") return beam().mode_area_m2;
    if (output == "w_s_ratio") return beam().spot_radius_m / params_.beam.waist_m;
    if (output == "theta_c") return critical_angle_deg(params_.sphere.index);
    if (output == "Theta_half") return half_energy_angle(profile());
    if (output == "P_saturation") return profile().saturation();
    throw std::invalid_argument("unknown output " + std::string(output));
  }

 private:
  const FocusedBeam& beam() {
    if (!beam_) beam_ = lens_transform(params_.beam, params_.sphere);
    return *beam_;
  }
  const CouplingRates& pump() {
    if (!pump_) pump_ = excitation_rates(params_, beam().mode_area_m2);
    return *pump_;
  }
  const CouplingRates& lasing() {
    if (!lasing_) lasing_ = lasing_rates(params_);
    return *lasing_;
  }
  const EmissionProfile& profile() {
    if (!profile_) {
      EmissionOptions opt;
      opt.normalization = emission_.normalization;
      opt.grid_size = emission_.grid_size;
      opt.bin_count = emission_.bin_count;
      opt.workers = 1;  // the sweep already runs points in parallel
      profile_ = emission_profile(params_.sphere.index, emission_.phi_deg, opt);
    }
    return *profile_;
  }

  const SystemParams& params_;
  const EmissionSettings& emission_;
  std::optional<FocusedBeam> beam_;
  std::optional<CouplingRates> pump_;
  std::optional<CouplingRates> lasing_;
  std::optional<EmissionProfile> profile_;
};

}  // namespace

const std::vector<std::string>& known_outputs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& o : kOutputs) out.emplace_back(o.name);
    return out;
  }();
  return names;
}

std::vector<std::string> output_columns(std::string_view output) {
  const auto& spec = spec_for(output);
  if (spec.shape == Shape::rate)
    return {std::string(output) + "_rad_s", std::string(output) + "_Hz"};
  return {std::string(spec.column)};
}

void stamp_provenance(Dataset& data, const SystemParams& params,
                      const EmissionSettings& emission) {
  data.set_provenance("tool_version", std::string(kToolVersion));
  data.set_provenance("Q0", format_number(params.sphere.q0));
  data.set_provenance("f1_0", format_number(params.pump.field_at_scatterer));
  data.set_provenance("f2_0", format_number(params.lasing.field_at_scatterer));
  data.set_provenance("normalization_mode", std::string(to_string(emission.normalization)));
  data.set_provenance("phi_deg", format_number(emission.phi_deg));
  data.set_provenance("emission_grid", std::to_string(emission.grid_size));
  data.set_provenance("emission_bins", std::to_string(emission.bin_count));
}

Dataset run_sweep(const SystemParams& params, const SweepGrid& grid,
                  const EmissionSettings& emission, unsigned workers) {
  Dataset data;
  for (const auto& axis : grid.axes) {
    if (axis.values.empty())
      throw std::invalid_argument("sweep axis '" + axis.name + "' is empty");
    data.add_column(axis_column(axis.name));
  }
  for (const auto& out : grid.outputs)
    for (auto& col : output_columns(out)) data.add_column(std::move(col));

  std::size_t points = 1;
  for (const auto& axis : grid.axes) points *= axis.values.size();

  auto evaluate = [&](std::size_t index) {
    // Row-major: the last axis varies fastest.
    std::vector<double> coords(grid.axes.size());
    std::size_t rest = index;
    for (std::size_t a = grid.axes.size(); a-- > 0;) {
      const auto& values = grid.axes[a].values;
      coords[a] = values[rest % values.size()];
      rest /= values.size();
    }

    std::vector<Cell> row;
    row.reserve(data.columns.size());
    try {
      SystemParams p = params;
      EmissionSettings e = emission;
      for (std::size_t a = 0; a < coords.size(); ++a) {
        p = with_axis_value(std::move(p), grid.axes[a].name, coords[a]);
        if (grid.axes[a].name == "phi") e.phi_deg = coords[a];
        row.emplace_back(coords[a]);
      }
      p = validate(std::move(p));
      PointEvaluator eval(p, e);
      for (const auto& out : grid.outputs) {
        const double v = eval.value(out);
        row.emplace_back(v);
        if (spec_for(out).shape == Shape::rate) row.emplace_back(rad_s_to_hz(v));
      }
    } catch (const std::exception& err) {
      std::string where;
      for (std::size_t a = 0; a < coords.size(); ++a) {
        if (a) where += ", ";
        where += grid.axes[a].name + "=" + format_number(coords[a]);
      }
      throw SweepError("grid point " + std::to_string(index) + " (" + where +
                       "): " + err.what());
    }
    return row;
  };

  data.rows = parallel_map<std::vector<Cell>>(points, workers, evaluate, 1);
  stamp_provenance(data, params, emission);
  return data;
}

}  // namespace wgm
