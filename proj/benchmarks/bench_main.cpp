#include <benchmark/benchmark.h>

#include "wgm/beam_optics.hpp"
#include "wgm/coupling.hpp"
#include "wgm/emission.hpp"
#include "wgm/spectral.hpp"
#include "wgm/sweep.hpp"

namespace {

void BM_EmissionProfile(benchmark::State& state) {
  wgm::EmissionOptions opt;
  opt.grid_size = static_cast<std::size_t>(state.range(0));
  opt.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(wgm::emission_profile(1.9, 0.0, opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmissionProfile)->Arg(10'000)->Arg(100'000)->Arg(400'000)->Unit(benchmark::kMillisecond);

void BM_RateSweep(benchmark::State& state) {
  wgm::SweepGrid grid;
  std::vector<double> rs;
  for (int i = 0; i < state.range(0); ++i) rs.push_back(10e-9 + 90e-9 * i / state.range(0));
  grid.axes = {{"r_s", rs}};
  grid.outputs = {"kappa_in", "kappa_R", "eta", "kappa_out"};
  const auto params = wgm::baseline_params();
  for (auto _ : state) benchmark::DoNotOptimize(wgm::run_sweep(params, grid, {}, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RateSweep)->Arg(50)->Arg(1000);

void BM_TimeDomainOracle(benchmark::State& state) {
  const auto p = wgm::baseline_params();
  const auto rates = wgm::excitation_rates(p, wgm::lens_transform(p.beam, p.sphere).mode_area_m2);
  const double K = rates.kappa_total();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        wgm::langevin_time_domain(rates, {rates.omega_eff + K, 1.0}, 40.0 / K, 0.05 / K));
}
BENCHMARK(BM_TimeDomainOracle);

}  // namespace
BENCHMARK_MAIN();
