// wgm: free-space excitation and collection for a scatterer-coupled
// microsphere. Exit codes: 0 success, 1 invalid input or failed check,
// 2 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wgm/beam_optics.hpp"
#include "wgm/config.hpp"
#include "wgm/coupling.hpp"
#include "wgm/dataset.hpp"
#include "wgm/emission.hpp"
#include "wgm/figures.hpp"
#include "wgm/spectral.hpp"
#include "wgm/sweep.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;

struct Options {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::string normalization;
  unsigned workers = 0;
  std::string figure;
};

wgm::RunConfig load_config(const Options& opt) {
  wgm::RunConfig cfg;
  if (opt.config_path.empty()) {
    cfg.params = wgm::baseline_params();
    cfg.notices.push_back("no --config given; using the baseline parameters");
  } else {
    std::ifstream in(opt.config_path);
    if (!in) throw wgm::IoError("cannot read config " + opt.config_path);
    std::stringstream text;
    text << in.rdbuf();
    cfg = wgm::parse_config(text.str());
  }
  if (!opt.normalization.empty())
    cfg.emission.normalization = *wgm::parse_normalization(opt.normalization);
  for (const auto& note : cfg.notices) std::cerr << "note: " << note << '\n';
  for (const auto& warn : cfg.params.derived.warnings) std::cerr << "warning: " << warn << '\n';
  return cfg;
}

wgm::OutputFormat format_of(const Options& opt) {
  return opt.format == "json" ? wgm::OutputFormat::json : wgm::OutputFormat::csv;
}

std::string extension(wgm::OutputFormat f) { return f == wgm::OutputFormat::json ? ".json" : ".csv"; }

// Single dataset: to --out if given, otherwise stdout.
void emit(const wgm::Dataset& data, const Options& opt) {
  const auto format = format_of(opt);
  if (opt.out_path.empty()) {
    std::cout << wgm::render(data, format);
    return;
  }
  wgm::write_dataset(opt.out_path, data, format);
  std::cerr << "wrote " << opt.out_path << '\n';
}

// Several datasets: --out names a directory (default: current directory).
void emit_many(const std::vector<wgm::NamedDataset>& sets, const Options& opt) {
  const auto format = format_of(opt);
  const fs::path dir = opt.out_path.empty() ? fs::path(".") : fs::path(opt.out_path);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw wgm::IoError("cannot create directory " + dir.string() + ": " + ec.message());
  for (const auto& s : sets) {
    const auto path = dir / (s.name + extension(format));
    wgm::write_dataset(path, s.data, format);
    std::cerr << "wrote " << path.string() << '\n';
  }
}

wgm::Dataset single_point(const wgm::RunConfig& cfg, std::vector<std::string> outputs) {
  wgm::SweepGrid grid;
  grid.outputs = std::move(outputs);
  return wgm::run_sweep(cfg.params, grid, cfg.emission, 1);
}

int run_excite(const Options& opt) {
  const auto cfg = load_config(opt);
  emit(single_point(cfg, {"g1", "kappa_in", "kappa_R", "kappa_0", "kappa_total", "T_min",
                          "eta", "w_s", "A_s"}),
       opt);
  const auto forms = wgm::efficiency_forms(wgm::excitation_rates(
      cfg.params, wgm::lens_transform(cfg.params.beam, cfg.params.sphere).mode_area_m2));
  std::cerr << "eta = " << forms.from_amplitude << " (Q0 = " << cfg.params.sphere.q0 << ")\n";
  return 0;
}

int run_focus(const Options& opt) {
  const auto cfg = load_config(opt);
  emit(single_point(cfg, {"F", "w0_prime", "s_prime", "z_R", "z_R_prime", "w_s", "A_s",
                          "w_s_ratio"}),
       opt);
  return 0;
}

int run_emission(const Options& opt) {
  const auto cfg = load_config(opt);
  wgm::EmissionOptions eo;
  eo.normalization = cfg.emission.normalization;
  eo.grid_size = cfg.emission.grid_size;
  eo.bin_count = cfg.emission.bin_count;
  eo.workers = opt.workers;
  const double n = cfg.params.sphere.index;
  auto profile = wgm::emission_profile(n, cfg.emission.phi_deg, eo);

  auto u = wgm::emission_u_dataset(n, {0.0, 45.0, 90.0});
  auto out = wgm::emission_out_dataset({profile});
  wgm::stamp_provenance(out, cfg.params, cfg.emission);
  emit_many({{"emission_u", std::move(u)}, {"emission_out", std::move(out)}}, opt);

  std::cout << "n = " << n << ", phi = " << cfg.emission.phi_deg
            << " deg, normalization = " << wgm::to_string(profile.normalization) << '\n';
  std::cout << "saturation P = " << profile.saturation() << '\n';
  if (profile.half_energy_deg)
    std::cout << "Theta_half = " << *profile.half_energy_deg << " deg\n";
  else
    std::cout << "Theta_half undefined under this normalization\n";
  return 0;
}

int run_spectrum(const Options& opt) {
  const auto cfg = load_config(opt);
  emit(wgm::spectrum_dataset(cfg.params), opt);
  return 0;
}

int run_verify(const Options& opt) {
  const auto cfg = load_config(opt);
  const auto beam = wgm::lens_transform(cfg.params.beam, cfg.params.sphere);
  const auto rates = wgm::excitation_rates(cfg.params, beam.mode_area_m2);
  const auto data = wgm::verification_dataset(rates, {-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0});
  emit(data, opt);
  double worst = 0.0;
  for (std::size_t r = 0; r < data.rows.size(); ++r)
    worst = std::max(worst, data.number(r, "relative_error"));
  const bool ok = worst <= 1e-6;
  std::cerr << "max relative error " << worst << (ok ? " (ok)" : " (exceeds 1e-6)") << '\n';
  return ok ? 0 : kExitInvalid;
}

int run_sweep_cmd(const Options& opt) {
  const auto cfg = load_config(opt);
  if (cfg.grid.outputs.empty())
    throw wgm::ConfigError(0, "sweep needs an 'outputs = ...' line in the config");
  emit(wgm::run_sweep(cfg, opt.workers), opt);
  return 0;
}

int run_figure(const Options& opt) {
  const auto figure = wgm::parse_figure(opt.figure);
  const auto cfg = load_config(opt);
  const auto result = wgm::figure_command(*figure, cfg, opt.workers);
  emit_many(result.datasets, opt);
  for (const auto& line : result.summary) std::cout << line << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scatterer-coupled microsphere: excitation, focusing, emission"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opt.config_path, "Configuration file (key = value)");
    cmd->add_option("--out", opt.out_path, "Output file, or directory for multi-file commands");
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--normalization", opt.normalization, "P(Theta) normalization")
        ->check(CLI::IsMember({"transmitted", "front", "full"}));
    cmd->add_option("--workers", opt.workers, "Worker threads (0 = all cores)");
  };

  auto* excite = app.add_subcommand("excite", "Coupling rates and excitation efficiency");
  auto* focus = app.add_subcommand("focus", "Sphere-lens transform of the pump beam");
  auto* emission = app.add_subcommand("emission", "Emission profile and half-energy angle");
  auto* spectrum = app.add_subcommand("spectrum", "Transmission spectrum of the pumped mode");
  auto* verify = app.add_subcommand("verify", "Time-domain oracle against the closed form");
  auto* sweep = app.add_subcommand("sweep", "Generic parameter sweep from the config");
  auto* figure = app.add_subcommand("figure", "Regenerate a figure dataset");
  figure->add_option("name", opt.figure, "fig2b, fig3, fig4, fig7, fig8 or spectrum")
      ->required()
      ->check(CLI::IsMember({"fig2b", "fig3", "fig4", "fig7", "fig8", "spectrum"}));
  for (auto* cmd : {excite, focus, emission, spectrum, verify, sweep, figure}) add_common(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*excite) return run_excite(opt);
    if (*focus) return run_focus(opt);
    if (*emission) return run_emission(opt);
    if (*spectrum) return run_spectrum(opt);
    if (*verify) return run_verify(opt);
    if (*sweep) return run_sweep_cmd(opt);
    if (*figure) return run_figure(opt);
  } catch (const wgm::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
