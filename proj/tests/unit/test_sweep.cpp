#include <string>

#include "doctest.h"
#include "wgm/beam_optics.hpp"
#include "wgm/constants.hpp"
#include "wgm/coupling.hpp"
#include "wgm/spectral.hpp"
#include "wgm/sweep.hpp"

using namespace wgm;

TEST_CASE("single point equals direct library calls") {
  const auto p = baseline_params();
  SweepGrid grid;
  grid.outputs = {"kappa_in", "eta", "T_min", "w_s", "kappa_out", "Q_out"};
  const auto d = run_sweep(p, grid, {}, 1);
  REQUIRE(d.rows.size() == 1);
  const auto beam = lens_transform(p.beam, p.sphere);
  const auto pump = excitation_rates(p, beam.mode_area_m2);
  const auto las = lasing_rates(p);
  CHECK(d.number(0, "kappa_in_rad_s") == pump.kappa_in);
  CHECK(d.number(0, "kappa_in_Hz") == rad_s_to_hz(pump.kappa_in));
  CHECK(d.number(0, "eta") == excitation_efficiency(pump));
  CHECK(d.number(0, "T_min") == t_min(pump));
  CHECK(d.number(0, "w_s_m") == beam.spot_radius_m);
  CHECK(d.number(0, "kappa_out_rad_s") == las.kappa_reservoir);
  CHECK(d.number(0, "Q_out") == las.omega / las.kappa_reservoir);
}

TEST_CASE("rows are row-major, last axis fastest") {
  SweepGrid grid;
  grid.axes = {{"n", {1.5, 1.7}}, {"r_s", {10e-9, 20e-9, 30e-9}}};
  grid.outputs = {"eta"};
  const auto d = run_sweep(baseline_params(), grid, {}, 2);
  REQUIRE(d.rows.size() == 6);
  CHECK(d.columns[0].name == "n");
  CHECK(d.columns[1].name == "r_s_m");
  CHECK(d.number(0, "n") == 1.5);
  CHECK(d.number(2, "n") == 1.5);
  CHECK(d.number(3, "n") == 1.7);
  CHECK(d.number(1, "r_s_m") == 20e-9);
  CHECK(d.number(5, "r_s_m") == 30e-9);
  // η grows with the scatterer in this range.
  CHECK(d.number(1, "eta") > d.number(0, "eta"));
}

TEST_CASE("identical bytes for any worker count") {
  SweepGrid grid;
  grid.axes = {{"r_s", {10e-9, 30e-9, 60e-9, 100e-9}}, {"n", {1.5, 1.9}}, {"phi", {0.0, 90.0}}};
  grid.outputs = {"eta", "kappa_R", "Theta_half", "P_saturation"};
  EmissionSettings e;
  e.grid_size = 20'000;
  const auto ref = to_csv(run_sweep(baseline_params(), grid, e, 1));
  for (unsigned w : {2u, 4u, 8u})
    CHECK(to_csv(run_sweep(baseline_params(), grid, e, w)) == ref);
}

TEST_CASE("failures name the grid point") {
  SweepGrid grid;
  grid.axes = {{"n", {1.5, 1.9}}, {"phi", {0.0}}};
  grid.outputs = {"Theta_half"};
  EmissionSettings e;
  e.grid_size = 5000;
  e.normalization = Normalization::full_sphere;  // saturates below 1/2
  try {
    run_sweep(baseline_params(), grid, e, 1);
    FAIL("expected a sweep error");
  } catch (const SweepError& err) {
    const std::string what = err.what();
    CHECK(what.find("grid point 0") != std::string::npos);
    CHECK(what.find("n=1.5") != std::string::npos);
    CHECK(what.find("undefined") != std::string::npos);
  }
  SweepGrid bad;
  bad.axes = {{"R", {10e-6, -1e-6}}};
  bad.outputs = {"eta"};
  CHECK_THROWS_WITH_AS(run_sweep(baseline_params(), bad, {}, 1),
                       doctest::Contains("R=-9.9999999999999995e-07"), SweepError);
}

TEST_CASE("provenance and columns") {
  SweepGrid grid;
  grid.outputs = {"g1"};
  const auto d = run_sweep(baseline_params(), grid, {}, 1);
  CHECK(d.columns.size() == 2);
  CHECK(d.columns[0].unit == "rad/s");
  CHECK(d.columns[1].unit == "Hz");
  bool has_version = false, has_mode = false;
  for (const auto& [k, v] : d.provenance) {
    has_version = has_version || (k == "tool_version" && v == kToolVersion);
    has_mode = has_mode || (k == "normalization_mode" && v == "transmitted");
  }
  CHECK(has_version);
  CHECK(has_mode);
  CHECK(output_columns("eta") == std::vector<std::string>{"eta"});
  CHECK_THROWS(output_columns("bogus"));
}
