#include "wgm/beam_optics.hpp"

#include <cmath>
#include <stdexcept>

#include "wgm/constants.hpp"

namespace wgm {

double focal_length(const MicrosphereSpec& sphere) {
  if (!(sphere.index > 1.0))
    throw std::invalid_argument("n must exceed 1 for a converging sphere lens");
  return sphere.index * sphere.radius_m / (2.0 * (sphere.index - 1.0));
}

double mode_area(double spot_radius_m) {
  if (!(spot_radius_m > 0.0))
    throw std::invalid_argument("spot radius must be positive");
  return 0.5 * kPi * spot_radius_m * spot_radius_m;
}

FocusedBeam lens_transform(const BeamSpec& beam, const MicrosphereSpec& sphere) {
  if (!(beam.wavelength_m > 0.0) || !(beam.waist_m > 0.0))
    throw std::invalid_argument("beam wavelength and waist must be positive");

  const double n = sphere.index;
  const double lambda = beam.wavelength_m;
  const double w0 = beam.waist_m;
  const double s = beam.waist_offset_m;

  FocusedBeam out;
  out.focal_length_m = focal_length(sphere);
  const double F = out.focal_length_m;

  out.rayleigh_range_m = kPi * w0 * w0 * n / lambda;
  const double zr = out.rayleigh_range_m;
  const double denom = (s - F) * (s - F) + zr * zr;

  out.waist_m = F * w0 / std::sqrt(denom);
  out.waist_position_m = (s * (s - F) + zr * zr) / denom * F;
  out.rayleigh_range_out_m = kPi * out.waist_m * out.waist_m * n / lambda;

  const double defocus =
      (out.waist_position_m - sphere.radius_m) / out.rayleigh_range_out_m;
  out.spot_radius_m = out.waist_m * std::sqrt(1.0 + defocus * defocus);
  out.mode_area_m2 = mode_area(out.spot_radius_m);
  return out;
}

}  // namespace wgm
