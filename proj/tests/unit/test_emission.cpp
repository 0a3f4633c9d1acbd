#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wgm/constants.hpp"
#include "wgm/emission.hpp"

using namespace wgm;

namespace {

template <class F>
double gk(F f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

// ∬ u |sin θ| dθ dφ over θ in [lo, hi) degrees and φ in [0°, 180°).
double sphere_integral(double index, double lo_deg, double hi_deg) {
  auto inner = [&](double phi) {
    return gk([&](double theta) {
      return angular_density({rad_to_deg(theta), rad_to_deg(phi)}, index) *
             std::abs(std::sin(theta));
    }, deg_to_rad(lo_deg), deg_to_rad(hi_deg));
  };
  return gk(inner, 0.0, kPi);
}

double shape_rad(double t, double n) { return 2 * t - std::asin(n * std::sin(t)); }
double shape_slope(double t, double n) {
  return 2 - n * std::cos(t) / std::sqrt(1 - n * n * std::sin(t) * std::sin(t));
}

}  // namespace

TEST_CASE("angular density values") {
  for (double n : {1.2, 1.5, 1.9}) {
    const double n5 = std::pow(n, 5);
    const double top = 3 * n5 / (4 * kPi * (n5 + 1));
    for (double phi : {0.0, 33.0, 90.0, 179.0})
      CHECK(angular_density({0.0, phi}, n) == doctest::Approx(top).epsilon(1e-15));
    for (double theta : {0.0, 17.0, 90.0, 151.0})
      CHECK(angular_density({theta, 90.0}, n) == doctest::Approx(top).epsilon(1e-14));
    for (double theta : {5.0, 60.0, 120.0}) {
      const double cav = angular_density({theta, 20.0}, n);
      const double vac = angular_density({360.0 - theta, 20.0}, n);
      CHECK(cav == doctest::Approx(n5 * vac).epsilon(1e-13));
    }
    CHECK(angular_density({90.0, 0.0}, n) == doctest::Approx(0.0));
  }
  CHECK_THROWS_AS(angular_density({360.0, 0.0}, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(angular_density({10.0, 180.0}, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(angular_density({10.0, 0.0}, 1.0), std::invalid_argument);
}

TEST_CASE("full-sphere normalization and hemisphere split") {
  for (double n : {1.1, 1.5, 1.9, 3.0}) {
    const double n5 = std::pow(n, 5);
    const double cavity = sphere_integral(n, 0.0, 180.0);
    const double vacuum = sphere_integral(n, 180.0, 360.0);
    CHECK(std::abs(cavity + vacuum - 1.0) < 1e-9);
    CHECK(std::abs(cavity - n5 / (n5 + 1)) < 1e-9);
  }
}

TEST_CASE("critical angle") {
  CHECK(critical_angle_deg(1.5) == doctest::Approx(41.8103148957786).epsilon(1e-12));
  CHECK(critical_angle_deg(2.0) == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(critical_angle_deg(1.0 + 1e-12) > 89.99);
}

TEST_CASE("output angle") {
  for (double n : {1.3, 1.5, 1.9, 2.5}) {
    CHECK(output_angle_deg(0.0, n) == 0.0);
    const double small = 1e-4;
    CHECK(output_angle_deg(small, n) / small == doctest::Approx(std::abs(2 - n)).epsilon(1e-6));
    CHECK_THROWS_AS(output_angle_deg(critical_angle_deg(n), n), TotalInternalReflection);
    CHECK_THROWS_AS(output_angle_deg(80.0, n), TotalInternalReflection);
  }
  CHECK(output_angle_deg(1.0, 1.9) == doctest::Approx(0.1).epsilon(1e-2));
}

TEST_CASE("collimation turning point and interior zero") {
  for (double n : {1.2, 1.5, 1.7, 1.9}) {
    const auto tp = collimation_turning_point_deg(n);
    REQUIRE(tp);
    CHECK(std::abs(shape_slope(deg_to_rad(*tp), n)) < 1e-9);
  }
  CHECK_FALSE(collimation_turning_point_deg(2.0));
  CHECK_FALSE(collimation_turning_point_deg(2.4));

  // Sign change of 2θ − asin(n sin θ) on (0, θc) requires 2θc < 90°.
  CHECK_FALSE(collimation_zero_deg(1.3));
  for (double n : {1.5, 1.7, 1.9}) {
    const auto z = collimation_zero_deg(n);
    REQUIRE(z);
    CHECK(*z > 0.0);
    CHECK(*z < critical_angle_deg(n));
    CHECK(std::abs(shape_rad(deg_to_rad(*z), n)) < 1e-12);
    CHECK(output_angle_deg(*z, n) < 1e-9);
  }
}

TEST_CASE("Fresnel transmission") {
  CHECK(fresnel_transmission(0.0, 0.0, 1.5) == doctest::Approx(0.96).epsilon(1e-14));
  CHECK(fresnel_transmission(0.0, 63.0, 1.5) == doctest::Approx(0.96).epsilon(1e-14));
  for (double n : {1.2, 1.5, 1.9}) {
    const double tc = critical_angle_deg(n);
    CHECK(fresnel_transmission(tc - 1e-6, 0.0, n) < 1e-2);
    CHECK(fresnel_transmission(tc - 1e-6, 90.0, n) < 1e-2);
    CHECK(fresnel_transmission(tc, 45.0, n) == 0.0);
    CHECK(fresnel_transmission(tc + 5, 45.0, n) == 0.0);
    for (double t : {3.0, 0.5 * tc, 0.9 * tc}) {
      const auto pair = fresnel_pair(t, n);
      CHECK(fresnel_transmission(t, 0.0, n) == doctest::Approx(pair.p).epsilon(1e-15));
      CHECK(fresnel_transmission(t, 90.0, n) == doctest::Approx(pair.s).epsilon(1e-14));
      CHECK(pair.p >= 0.0);
      CHECK(pair.p <= 1.0);
      CHECK(pair.s >= 0.0);
      CHECK(pair.s <= pair.p);  // s-polarization reflects more on this side
    }
  }
  // Continuity up to the edge.
  double prev = fresnel_transmission(0.0, 30.0, 1.5);
  for (int i = 1; i < 4000; ++i) {
    const double t = critical_angle_deg(1.5) * i / 4000.0;
    const double now = fresnel_transmission(t, 30.0, 1.5);
    CHECK(std::abs(now - prev) < 0.05);
    prev = now;
  }
}

TEST_CASE("emission profile invariants") {
  EmissionOptions opt;
  opt.grid_size = 100'000;
  for (auto mode : {Normalization::transmitted, Normalization::front_hemisphere,
                    Normalization::full_sphere}) {
    for (double n : {1.3, 1.5, 1.9, 2.3}) {
      for (double phi : {0.0, 45.0, 90.0}) {
        opt.normalization = mode;
        const auto p = emission_profile(n, phi, opt);
        CHECK(p.cumulative.front() == 0.0);
        bool monotone = true;
        for (std::size_t i = 1; i < p.cumulative.size(); ++i)
          monotone = monotone && p.cumulative[i] >= p.cumulative[i - 1];
        CHECK(monotone);
        double sum = 0.0;
        bool nonneg = true;
        for (std::size_t b = 0; b < p.density.size(); ++b) {
          nonneg = nonneg && p.density[b] >= 0.0;
          sum += p.density[b] * (p.bin_edges[b + 1] - p.bin_edges[b]);
        }
        CHECK(nonneg);
        CHECK(std::abs(sum - p.saturation()) < 1e-6);
        for (double t : p.output_angles) REQUIRE(t >= 0.0);
        if (mode == Normalization::transmitted)
          CHECK(p.saturation() == doctest::Approx(1.0).epsilon(1e-12));
        else
          CHECK(p.saturation() < 1.0);
      }
    }
  }
}

TEST_CASE("a single bin holds the whole transmitted weight") {
  EmissionOptions opt;
  opt.grid_size = 1000;
  opt.bin_count = 1;
  opt.normalization = Normalization::full_sphere;
  const auto p = emission_profile(1.5, 0.0, opt);
  double total = 0.0;
  for (double w : p.weights) total += w;
  REQUIRE(p.cumulative.size() == 2);
  CHECK(p.cumulative[1] == doctest::Approx(total / p.normalizer).epsilon(1e-14));
}

TEST_CASE("grid precondition") {
  EmissionOptions opt;
  opt.grid_size = 999;
  CHECK_THROWS_AS(emission_profile(1.5, 0.0, opt), std::invalid_argument);
  CHECK_THROWS_AS(emission_profile(0.9, 0.0), std::invalid_argument);
}

TEST_CASE("half-energy angle of a uniform synthetic profile") {
  EmissionProfile p;
  const int bins = 100;
  for (int b = 0; b <= bins; ++b) p.bin_edges.push_back(10.0 * b / bins);
  p.density.assign(bins, 0.1);
  p.cumulative.push_back(0.0);
  for (int b = 0; b < bins; ++b) p.cumulative.push_back(p.cumulative.back() + 0.1 * 0.1);
  CHECK(half_energy_angle(p) == doctest::Approx(5.0).epsilon(1e-7));
  CHECK(p.cumulative_at(2.5) == doctest::Approx(0.25));
  CHECK(p.cumulative_at(-1.0) == 0.0);
  CHECK(p.cumulative_at(50.0) == doctest::Approx(1.0));

  for (auto& c : p.cumulative) c *= 0.4;
  CHECK_THROWS_AS(half_energy_angle(p), HalfEnergyUndefined);
}

TEST_CASE("half-energy angle is reported, not NaN, when undefined") {
  EmissionOptions opt;
  opt.grid_size = 20'000;
  opt.normalization = Normalization::full_sphere;
  const auto p = emission_profile(1.5, 0.0, opt);
  CHECK(p.saturation() < 0.5);
  CHECK_FALSE(p.half_energy_deg);
  CHECK_THROWS_WITH_AS(half_energy_angle(p), doctest::Contains("undefined"), HalfEnergyUndefined);
}

TEST_CASE("pushforward matches the single-branch density") {
  for (double n : {1.5, 1.7}) {
    for (double phi : {0.0, 60.0}) {
      const double tp = *collimation_turning_point_deg(n);
      EmissionOptions opt;
      opt.grid_size = 400'000;
      opt.bin_count = 200;
      opt.theta_window_deg = 0.8 * tp;
      const auto p = emission_profile(n, phi, opt);
      const double th1 = deg_to_rad(opt.theta_window_deg);
      int checked = 0;
      for (std::size_t b = 5; b + 5 < p.density.size(); ++b) {
        const double centre = deg_to_rad(0.5 * (p.bin_edges[b] + p.bin_edges[b + 1]));
        auto h = [&](double t) { return shape_rad(t, n) - centre; };
        boost::math::tools::eps_tolerance<double> tol(48);
        const auto [lo, hi] = boost::math::tools::bisect(h, 0.0, th1, tol);
        const double t = 0.5 * (lo + hi);
        const double td = rad_to_deg(t);
        const double analytic = fresnel_transmission(td, phi, n) *
                                angular_density({td, phi}, n) /
                                std::abs(shape_slope(t, n)) * (kPi / 180.0) / p.normalizer;
        CHECK(p.density[b] == doctest::Approx(analytic).epsilon(0.01));
        ++checked;
      }
      CHECK(checked > 150);
    }
  }
}

TEST_CASE("phi = 0 and phi = 90 bound the half-energy angle") {
  EmissionOptions opt;
  opt.grid_size = 200'000;
  for (double n : {1.5, 1.7, 1.9}) {
    const double a = *emission_profile(n, 0.0, opt).half_energy_deg;
    const double b = *emission_profile(n, 90.0, opt).half_energy_deg;
    const double lo = std::min(a, b), hi = std::max(a, b);
    for (double phi : {15.0, 30.0, 45.0, 60.0, 75.0}) {
      const double mid = *emission_profile(n, phi, opt).half_energy_deg;
      CHECK(mid >= lo - 1e-6);
      CHECK(mid <= hi + 1e-6);
    }
  }
}

TEST_CASE("profile is identical for any worker count") {
  EmissionOptions opt;
  opt.grid_size = 50'000;
  opt.workers = 1;
  const auto ref = emission_profile(1.9, 30.0, opt);
  for (unsigned w : {2u, 3u, 8u}) {
    opt.workers = w;
    const auto p = emission_profile(1.9, 30.0, opt);
    CHECK(p.weights == ref.weights);
    CHECK(p.output_angles == ref.output_angles);
    CHECK(p.density == ref.density);
    CHECK(p.cumulative == ref.cumulative);
    CHECK(p.half_energy_deg == ref.half_energy_deg);
  }
}

TEST_CASE("energy budget of a slice closes") {
  for (auto m : {AngularMeasure::slice, AngularMeasure::solid_angle}) {
    for (double n : {1.1, 1.5, 1.9, 3.0}) {
      for (double phi : {0.0, 37.0, 90.0}) {
        const auto b = slice_energy_budget(n, phi, m);
        const double sum = b.transmitted + b.fresnel_reflected + b.trapped + b.vacuum;
        CHECK(std::abs(sum - b.total) < 1e-9 * b.total);
        CHECK(b.transmitted > 0.0);
        CHECK(b.fresnel_reflected > 0.0);
      }
    }
  }
  // Transmitted part equals the profile's quadrature sum.
  EmissionOptions opt;
  opt.grid_size = 400'000;
  const auto p = emission_profile(1.5, 0.0, opt);
  CHECK(p.normalizer == doctest::Approx(slice_energy_budget(1.5, 0.0).transmitted).epsilon(1e-6));
}

TEST_CASE("normalization names") {
  CHECK(parse_normalization("front") == Normalization::front_hemisphere);
  CHECK(parse_normalization("full_sphere") == Normalization::full_sphere);
  CHECK(parse_normalization("transmitted") == Normalization::transmitted);
  CHECK_FALSE(parse_normalization("half"));
  for (auto m : {Normalization::transmitted, Normalization::front_hemisphere, Normalization::full_sphere})
    CHECK(parse_normalization(to_string(m)) == m);
}
