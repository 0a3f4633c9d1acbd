#pragma once

#include "wgm/params.hpp"

namespace wgm {

/// Gaussian beam after focusing by the microsphere.
///
/// Distances are measured from the sphere center; the scatterer sits on the
/// far surface, a distance R from the center. Both Rayleigh ranges use the
/// cavity index n (z_R = π w0² n / λ), which is the convention the closed
/// forms below were derived with even though the input beam is in vacuum.
struct FocusedBeam {
  double focal_length_m = 0.0;       // F
  double waist_m = 0.0;              // w0'
  double waist_position_m = 0.0;     // s'
  double rayleigh_range_m = 0.0;     // z_R of the input beam
  double rayleigh_range_out_m = 0.0;  // z_R' of the focused beam
  double spot_radius_m = 0.0;        // w_s at the scatterer plane
  double mode_area_m2 = 0.0;         // A_s = π w_s² / 2

  bool operator==(const FocusedBeam&) const = default;
};

/// Thick-lens focal length nR / (2(n − 1)). Throws for n <= 1.
double focal_length(const MicrosphereSpec& sphere);

FocusedBeam lens_transform(const BeamSpec& beam, const MicrosphereSpec& sphere);

/// Effective area of a Gaussian spot: ∫∫ exp(−2ρ²/w²) dA = π w² / 2.
double mode_area(double spot_radius_m);

}  // namespace wgm
