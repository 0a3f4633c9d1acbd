#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wgm {

struct MicrosphereSpec {
  double radius_m = 0.0;  // R
  double index = 0.0;     // n = sqrt(eps_c)
  double q0 = 1e8;        // intrinsic quality factor

  double permittivity() const { return index * index; }

  bool operator==(const MicrosphereSpec&) const = default;
};

struct ScattererSpec {
  double radius_m = 0.0;      // r_s
  double permittivity = 0.0;  // eps_s

  bool operator==(const ScattererSpec&) const = default;
};

/// Input Gaussian beam. `waist_offset_m` is the signed distance from the beam
/// waist to the sphere center; positive means the waist sits on the incoming
/// side.
struct BeamSpec {
  double wavelength_m = 0.0;  // lambda_1
  double waist_m = 0.0;       // w0
  double waist_offset_m = 0.0;  // s

  bool operator==(const BeamSpec&) const = default;
};

/// A fundamental TE whispering-gallery mode, identified by its vacuum
/// wavelength and the normalized field |E(0)/E_max| at the scatterer.
struct ModeSpec {
  double wavelength_m = 0.0;
  double field_at_scatterer = 0.4;  // f(0)

  bool operator==(const ModeSpec&) const = default;
};

/// Quantities every other module needs, filled in by validate().
struct DerivedScalars {
  double omega_pump = 0.0;   // rad/s
  double omega_lasing = 0.0;  // rad/s
  double cavity_permittivity = 0.0;
  double polarizability = 0.0;  // m^3, p = eps0 * alpha * E
  double volume_pump = 0.0;    // m^3
  double volume_lasing = 0.0;  // m^3
  std::vector<std::string> warnings;

  bool operator==(const DerivedScalars&) const = default;
};

struct SystemParams {
  MicrosphereSpec sphere;
  ScattererSpec scatterer;
  BeamSpec beam;
  ModeSpec pump;    // excitation WGM, wavelength equals beam.wavelength_m
  ModeSpec lasing;  // lasing WGM
  DerivedScalars derived;

  bool operator==(const SystemParams&) const = default;
};

struct FieldError {
  std::string field;
  std::string message;
};

/// Thrown by validate(); carries every violated invariant, not just the first.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<FieldError> errors);

  const std::vector<FieldError>& errors() const noexcept { return errors_; }

 private:
  std::vector<FieldError> errors_;
};

/// Checks every invariant and returns a copy with `derived` recomputed.
/// Idempotent.
SystemParams validate(SystemParams params);

/// 2*pi*c / lambda. Throws std::invalid_argument for lambda <= 0.
double omega_from_lambda(double wavelength_m);

/// Rayleigh polarizability 4*pi*r^3*(eps-1)/(eps+2), in m^3.
double polarizability(const ScattererSpec& scatterer);

/// Fundamental WGM volume 3.4 pi^{3/2} (lambda/(2 pi n))^{7/6} R^{11/6}.
double mode_volume(const MicrosphereSpec& sphere, const ModeSpec& mode);

}  // namespace wgm
