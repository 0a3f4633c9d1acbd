#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace wgm {

/// Direction of a scattered photon about the scatterer. θ in [0°, 180°) lies
/// on the cavity side, θ in [180°, 360°) on the vacuum side; φ in [0°, 180°)
/// covers the rest by symmetry.
struct AngularPoint {
  double theta_deg = 0.0;
  double phi_deg = 0.0;
};

/// Which total the cumulative energy ratio P(Θ) is divided by.
enum class Normalization {
  transmitted,       // energy that leaves through the sphere, θ in [0, θc)
  front_hemisphere,  // slice weight on θ in [0°, 90°)
  full_sphere,       // slice weight on θ in [0°, 360°)
};

/// Measure used for the φ-slice weights. `slice` is dθ (the default);
/// `solid_angle` weighs by |sin θ| dθ for sensitivity studies.
enum class AngularMeasure { slice, solid_angle };

std::string_view to_string(Normalization mode);
/// Accepts "transmitted", "front", "front_hemisphere", "full", "full_sphere".
std::optional<Normalization> parse_normalization(std::string_view text);

class TotalInternalReflection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class HalfEnergyUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Normalized angular out-coupling density u(θ, φ) per steradian.
double angular_density(AngularPoint point, double index);

/// arcsin(1/n) in degrees.
double critical_angle_deg(double index);

/// Output angle after one chord through the sphere, Θ = |2θ − arcsin(n sin θ)|.
/// Throws TotalInternalReflection for θ >= θc.
double output_angle_deg(double theta_deg, double index);

/// First stationary point of 2θ − arcsin(n sin θ), where f stops increasing.
/// Present only for n < 2.
std::optional<double> collimation_turning_point_deg(double index);

/// Interior zero θ* in (0, θc) of 2θ − arcsin(n sin θ), found by bisection.
/// Exists for √2 < n < 2.
std::optional<double> collimation_zero_deg(double index);

struct FresnelPair {
  double p = 0.0;
  double s = 0.0;
};

/// Power transmission for internal incidence at θ from index n into vacuum.
/// Zero at and beyond the critical angle.
FresnelPair fresnel_pair(double theta_deg, double index);

/// T(θ, φ) = T_p cos²φ + T_s sin²φ.
double fresnel_transmission(double theta_deg, double phi_deg, double index);

struct EmissionOptions {
  Normalization normalization = Normalization::transmitted;
  AngularMeasure measure = AngularMeasure::slice;
  std::size_t grid_size = 400'000;  // emitting-angle samples, >= 1000
  std::size_t bin_count = 0;        // 0: grid_size / 40
  /// Upper limit of the sampled emitting angles (deg); 0 means θc. Values
  /// above θc are clamped.
  double theta_window_deg = 0.0;
  /// Upper edge of the Θ histogram (deg); 0 means the largest sampled Θ.
  double output_range_deg = 0.0;
  unsigned workers = 0;
};

/// Distribution of the output angle Θ for one azimuth slice, built by
/// pushing the weights T·u·dθ on a uniform θ grid forward through Θ = f(θ).
struct EmissionProfile {
  double index = 0.0;
  double phi_deg = 0.0;
  Normalization normalization = Normalization::transmitted;
  AngularMeasure measure = AngularMeasure::slice;

  std::vector<double> theta_grid;     // sample midpoints (deg)
  std::vector<double> output_angles;  // Θ per sample (deg)
  std::vector<double> weights;        // unnormalized T·u·Δθ per sample

  std::vector<double> bin_edges;   // Θ edges (deg), bins + 1 entries
  std::vector<double> density;     // p(Θ) per degree, one per bin
  std::vector<double> cumulative;  // P at each edge, cumulative[0] = 0
  double normalizer = 1.0;
  std::optional<double> half_energy_deg;

  double saturation() const { return cumulative.empty() ? 0.0 : cumulative.back(); }

  /// P(Θ), linear inside a bin (p is constant there).
  double cumulative_at(double output_deg) const;
};

EmissionProfile emission_profile(double index, double phi_deg,
                                 const EmissionOptions& options = {});

/// Θ with P(Θ) = 1/2, by bisection to 1e-7 degrees. Throws
/// HalfEnergyUndefined when the profile saturates below 1/2.
double half_energy_angle(const EmissionProfile& profile);

/// Slice integral of u used as the normalizer for `mode`.
double normalization_total(Normalization mode, double index, double phi_deg,
                           AngularMeasure measure,
                           double transmitted_weight);

/// Where the scattered energy of one φ slice goes.
struct SliceBudget {
  double transmitted = 0.0;        // ∫ T u over [0, θc)
  double fresnel_reflected = 0.0;  // ∫ (1 − T) u over [0, θc)
  double trapped = 0.0;            // cavity side beyond θc (total internal reflection)
  double vacuum = 0.0;             // θ in [180°, 360°)
  double total = 0.0;              // closed form of ∫ u over the whole slice
};

SliceBudget slice_energy_budget(double index, double phi_deg,
                                AngularMeasure measure = AngularMeasure::slice);

}  // namespace wgm
