#include "wgm/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wgm/constants.hpp"

namespace wgm {
namespace {

std::string join_errors(const std::vector<FieldError>& errors) {
  std::ostringstream out;
  out << "invalid parameters:";
  for (const auto& e : errors) out << "\n  " << e.field << ": " << e.message;
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<FieldError> errors)
    : std::invalid_argument(join_errors(errors)), errors_(std::move(errors)) {}

double omega_from_lambda(double wavelength_m) {
  if (!(wavelength_m > 0.0))
    throw std::invalid_argument("wavelength must be positive");
  return 2.0 * kPi * kSpeedOfLight / wavelength_m;
}

double polarizability(const ScattererSpec& scatterer) {
  const double r = scatterer.radius_m;
  const double eps = scatterer.permittivity;
  return 4.0 * kPi * r * r * r * (eps - 1.0) / (eps + 2.0);
}

double mode_volume(const MicrosphereSpec& sphere, const ModeSpec& mode) {
  const double reduced = mode.wavelength_m / (2.0 * kPi * sphere.index);
  return 3.4 * std::pow(kPi, 1.5) * std::pow(reduced, 7.0 / 6.0) *
         std::pow(sphere.radius_m, 11.0 / 6.0);
}

SystemParams validate(SystemParams p) {
  std::vector<FieldError> errors;
  auto require = [&](bool ok, const char* field, const char* message) {
    if (!ok) errors.push_back({field, message});
  };

  // Written as !(x > 0) so NaN is rejected too.
  require(p.sphere.radius_m > 0.0, "R", "R must be positive");
  require(p.sphere.index > 1.0, "n", "n must exceed 1");
  require(p.sphere.q0 > 0.0, "Q0", "Q0 must be positive");
  require(p.scatterer.radius_m > 0.0, "r_s", "r_s must be positive");
  require(p.scatterer.permittivity > 1.0, "eps_s", "eps_s must exceed 1");
  require(p.beam.wavelength_m > 0.0, "lambda1", "lambda1 must be positive");
  require(p.beam.waist_m > 0.0, "w0", "w0 must be positive");
  require(std::isfinite(p.beam.waist_offset_m), "s", "s must be finite");
  require(p.pump.wavelength_m == p.beam.wavelength_m, "lambda1",
          "excitation mode wavelength must equal the beam wavelength");
  require(p.lasing.wavelength_m > 0.0, "lambda2", "lambda2 must be positive");
  require(p.pump.field_at_scatterer > 0.0 && p.pump.field_at_scatterer <= 1.0,
          "f1_0", "f1_0 must lie in (0, 1]");
  require(
      p.lasing.field_at_scatterer > 0.0 && p.lasing.field_at_scatterer <= 1.0,
      "f2_0", "f2_0 must lie in (0, 1]");

  if (!errors.empty()) throw ValidationError(std::move(errors));

  DerivedScalars d;
  d.omega_pump = omega_from_lambda(p.beam.wavelength_m);
  d.omega_lasing = omega_from_lambda(p.lasing.wavelength_m);
  d.cavity_permittivity = p.sphere.permittivity();
  d.polarizability = polarizability(p.scatterer);
  d.volume_pump = mode_volume(p.sphere, p.pump);
  d.volume_lasing = mode_volume(p.sphere, p.lasing);

  const double shortest = std::min(p.beam.wavelength_m, p.lasing.wavelength_m);
  if (p.scatterer.radius_m > shortest / 5.0) {
    d.warnings.push_back(
        "r_s exceeds lambda/5; the point-dipole scatterer model is marginal");
  }
  p.derived = std::move(d);
  return p;
}

}  // namespace wgm
