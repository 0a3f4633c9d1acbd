#include "wgm/emission.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include "wgm/constants.hpp"
#include "wgm/parallel.hpp"

namespace wgm {
namespace {

void require_index(double index) {
  if (!(index > 1.0)) throw std::invalid_argument("n must exceed 1");
}

// sin²θ cos²φ term shared by both hemispheres, without the prefactor.
double dipole_shape(double theta, double phi) {
  const double st = std::sin(theta);
  const double cp = std::cos(phi);
  return 1.0 - st * st * cp * cp;
}

double prefactor(double index) {
  const double n5 = std::pow(index, 5);
  return 3.0 / (4.0 * kPi * (n5 + 1.0));
}

// Radian version of u for internal use; theta in [0, 2π).
double density_rad(double theta, double phi, double index) {
  const double side = theta < kPi ? std::pow(index, 5) : 1.0;
  return side * prefactor(index) * dipole_shape(theta, phi);
}

double measure_factor(AngularMeasure measure, double theta) {
  return measure == AngularMeasure::slice ? 1.0 : std::abs(std::sin(theta));
}

double sin_refracted(double theta, double index) {
  return std::min(1.0, index * std::sin(theta));
}

FresnelPair fresnel_rad(double theta, double index) {
  const double st = sin_refracted(theta, index);
  if (st >= 1.0) return {};
  const double ci = std::cos(theta);
  const double ct = std::sqrt(1.0 - st * st);
  const double rs = (index * ci - ct) / (index * ci + ct);
  const double rp = (ci - index * ct) / (ci + index * ct);
  return {1.0 - rp * rp, 1.0 - rs * rs};
}

double transmission_rad(double theta, double phi, double index) {
  const auto t = fresnel_rad(theta, index);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  return t.p * cp * cp + t.s * sp * sp;
}

template <class F>
double integrate_smooth(F f, double a, double b) {
  // Integrands here are trigonometric polynomials of low degree per piece.
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

template <class F>
double integrate_edge(F f, double a, double b) {
  // Fresnel T has a square-root edge at θc.
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, a, b, 1e-13);
}

double collimation_shape(double theta, double index) {
  return 2.0 * theta - std::asin(sin_refracted(theta, index));
}

}  // namespace

std::string_view to_string(Normalization mode) {
  switch (mode) {
    case Normalization::transmitted: return "transmitted";
    case Normalization::front_hemisphere: return "front_hemisphere";
    case Normalization::full_sphere: return "full_sphere";
  }
  return "unknown";
}

std::optional<Normalization> parse_normalization(std::string_view text) {
  if (text == "transmitted") return Normalization::transmitted;
  if (text == "front" || text == "front_hemisphere")
    return Normalization::front_hemisphere;
  if (text == "full" || text == "full_sphere") return Normalization::full_sphere;
  return std::nullopt;
}

double angular_density(AngularPoint point, double index) {
  require_index(index);
  if (!(point.theta_deg >= 0.0 && point.theta_deg < 360.0))
    throw std::invalid_argument("theta must lie in [0, 360) degrees");
  if (!(point.phi_deg >= 0.0 && point.phi_deg < 180.0))
    throw std::invalid_argument("phi must lie in [0, 180) degrees");
  return density_rad(deg_to_rad(point.theta_deg), deg_to_rad(point.phi_deg),
                     index);
}

double critical_angle_deg(double index) {
  require_index(index);
  return rad_to_deg(std::asin(1.0 / index));
}

double output_angle_deg(double theta_deg, double index) {
  require_index(index);
  if (theta_deg < 0.0) throw std::invalid_argument("theta must be non-negative");
  if (theta_deg >= critical_angle_deg(index))
    throw TotalInternalReflection("emitting angle at or beyond the critical angle");
  return rad_to_deg(std::abs(collimation_shape(deg_to_rad(theta_deg), index)));
}

std::optional<double> collimation_turning_point_deg(double index) {
  require_index(index);
  if (index >= 2.0) return std::nullopt;
  // d/dθ [2θ − asin(n sinθ)] = 0  ⇔  sin²θ = (4 − n²) / (3n²).
  const double s2 = (4.0 - index * index) / (3.0 * index * index);
  return rad_to_deg(std::asin(std::sqrt(s2)));
}

std::optional<double> collimation_zero_deg(double index) {
  const auto turning = collimation_turning_point_deg(index);
  if (!turning) return std::nullopt;
  const double lo = deg_to_rad(*turning);
  const double hi = std::asin(1.0 / index);
  auto h = [index](double t) { return collimation_shape(t, index); };
  if (!(h(lo) > 0.0 && h(hi) < 0.0)) return std::nullopt;

  boost::math::tools::eps_tolerance<double> tol(50);
  const auto [a, b] = boost::math::tools::bisect(h, lo, hi, tol);
  return rad_to_deg(0.5 * (a + b));
}

FresnelPair fresnel_pair(double theta_deg, double index) {
  require_index(index);
  if (theta_deg >= critical_angle_deg(index)) return {};
  return fresnel_rad(deg_to_rad(theta_deg), index);
}

double fresnel_transmission(double theta_deg, double phi_deg, double index) {
  require_index(index);
  if (theta_deg >= critical_angle_deg(index)) return 0.0;
  return transmission_rad(deg_to_rad(theta_deg), deg_to_rad(phi_deg), index);
}

double EmissionProfile::cumulative_at(double output_deg) const {
  if (bin_edges.size() < 2 || output_deg <= bin_edges.front()) return 0.0;
  if (output_deg >= bin_edges.back()) return cumulative.back();
  const auto it = std::upper_bound(bin_edges.begin(), bin_edges.end(), output_deg);
  const auto bin = static_cast<std::size_t>(it - bin_edges.begin()) - 1;
  return cumulative[bin] + density[bin] * (output_deg - bin_edges[bin]);
}

double normalization_total(Normalization mode, double index, double phi_deg,
                           AngularMeasure measure, double transmitted_weight) {
  const double phi = deg_to_rad(phi_deg);
  auto u = [&](double t) {
    return density_rad(t, phi, index) * measure_factor(measure, t);
  };
  switch (mode) {
    case Normalization::transmitted:
      return transmitted_weight;
    case Normalization::front_hemisphere:
      return integrate_smooth(u, 0.0, 0.5 * kPi);
    case Normalization::full_sphere:
      return integrate_smooth(u, 0.0, kPi) + integrate_smooth(u, kPi, 2.0 * kPi);
  }
  throw std::invalid_argument("unknown normalization mode");
}

EmissionProfile emission_profile(double index, double phi_deg,
                                 const EmissionOptions& options) {
  require_index(index);
  if (options.grid_size < 1000)
    throw std::invalid_argument("emission grid needs at least 1000 samples");

  EmissionProfile prof;
  prof.index = index;
  prof.phi_deg = phi_deg;
  prof.normalization = options.normalization;
  prof.measure = options.measure;

  const double phi = deg_to_rad(phi_deg);
  const double theta_c = std::asin(1.0 / index);
  const double window = options.theta_window_deg > 0.0
                            ? std::min(theta_c, deg_to_rad(options.theta_window_deg))
                            : theta_c;
  const std::size_t samples = options.grid_size;
  const double step = window / static_cast<double>(samples);

  prof.theta_grid.resize(samples);
  prof.output_angles.resize(samples);
  prof.weights.resize(samples);
  parallel_for(
      samples, options.workers,
      [&](std::size_t i) {
        const double theta = (static_cast<double>(i) + 0.5) * step;
        prof.theta_grid[i] = rad_to_deg(theta);
        prof.output_angles[i] = rad_to_deg(std::abs(collimation_shape(theta, index)));
        prof.weights[i] = transmission_rad(theta, phi, index) *
                          density_rad(theta, phi, index) *
                          measure_factor(options.measure, theta) * step;
      },
      4096);

  // Sequential reductions keep the result independent of the worker count.
  double transmitted = 0.0;
  for (double w : prof.weights) transmitted += w;
  prof.normalizer = normalization_total(options.normalization, index, phi_deg,
                                        options.measure, transmitted);

  const std::size_t bins =
      options.bin_count > 0 ? options.bin_count : std::max<std::size_t>(1, samples / 40);
  double top = options.output_range_deg;
  if (!(top > 0.0)) {
    top = *std::max_element(prof.output_angles.begin(), prof.output_angles.end());
    top = top > 0.0 ? std::nextafter(top, 2.0 * top) : 1.0;
  }
  const double width = top / static_cast<double>(bins);

  prof.bin_edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b)
    prof.bin_edges[b] = top * static_cast<double>(b) / static_cast<double>(bins);

  std::vector<double> mass(bins, 0.0);
  for (std::size_t i = 0; i < samples; ++i) {
    const double theta_out = prof.output_angles[i];
    if (theta_out >= top) continue;  // outside a caller-chosen range
    const auto b = std::min(bins - 1, static_cast<std::size_t>(theta_out / width));
    mass[b] += prof.weights[i];
  }

  prof.density.resize(bins);
  prof.cumulative.assign(bins + 1, 0.0);
  for (std::size_t b = 0; b < bins; ++b) {
    const double share = mass[b] / prof.normalizer;
    prof.density[b] = share / width;
    prof.cumulative[b + 1] = prof.cumulative[b] + share;
  }

  if (prof.saturation() >= 0.5) prof.half_energy_deg = half_energy_angle(prof);
  return prof;
}

double half_energy_angle(const EmissionProfile& profile) {
  if (!(profile.saturation() >= 0.5)) {
    throw HalfEnergyUndefined(
        "half-energy angle undefined under this normalization (saturates at " +
        std::to_string(profile.saturation()) + ")");
  }
  auto excess = [&](double x) { return profile.cumulative_at(x) - 0.5; };
  double lo = profile.bin_edges.front();
  double hi = profile.bin_edges.back();
  auto tol = [](double a, double b) { return std::abs(b - a) < 1e-7; };
  const auto [a, b] = boost::math::tools::bisect(excess, lo, hi, tol);
  return 0.5 * (a + b);
}

SliceBudget slice_energy_budget(double index, double phi_deg,
                                AngularMeasure measure) {
  require_index(index);
  const double phi = deg_to_rad(phi_deg);
  const double theta_c = std::asin(1.0 / index);
  auto u = [&](double t) {
    return density_rad(t, phi, index) * measure_factor(measure, t);
  };
  auto tu = [&](double t) { return transmission_rad(t, phi, index) * u(t); };
  auto ru = [&](double t) { return (1.0 - transmission_rad(t, phi, index)) * u(t); };

  SliceBudget b;
  b.transmitted = integrate_edge(tu, 0.0, theta_c);
  b.fresnel_reflected = integrate_edge(ru, 0.0, theta_c);
  b.trapped = integrate_smooth(u, theta_c, kPi);
  b.vacuum = integrate_smooth(u, kPi, 2.0 * kPi);

  // ∫ over a half-plane of (1 − sin²θ cos²φ): π − (π/2)cos²φ for dθ,
  // 2 − (4/3)cos²φ for |sinθ| dθ. The two sides carry n⁵ and 1.
  const double c2 = std::cos(phi) * std::cos(phi);
  const double half = measure == AngularMeasure::slice ? kPi - 0.5 * kPi * c2
                                                       : 2.0 - 4.0 / 3.0 * c2;
  b.total = prefactor(index) * (std::pow(index, 5) + 1.0) * half;
  return b;
}

}  // namespace wgm
