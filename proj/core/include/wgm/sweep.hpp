#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wgm/config.hpp"
#include "wgm/dataset.hpp"

namespace wgm {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Output names a sweep can request. Rates expand to `<name>_rad_s` and
/// `<name>_Hz` columns.
const std::vector<std::string>& known_outputs();

/// Column names written for one output.
std::vector<std::string> output_columns(std::string_view output);

/// A grid point failed; the message names the point.
class SweepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluates every grid point (in parallel on `workers` threads, 0 = all
/// cores) and returns one row per point in row-major axis order. With no
/// axes the result is a single row for the base parameters. Output bytes do
/// not depend on the worker count.
Dataset run_sweep(const SystemParams& params, const SweepGrid& grid,
                  const EmissionSettings& emission, unsigned workers = 0);

inline Dataset run_sweep(const RunConfig& cfg, unsigned workers = 0) {
  return run_sweep(cfg.params, cfg.grid, cfg.emission, workers);
}

/// Provenance entries shared by every dataset the tool writes.
void stamp_provenance(Dataset& data, const SystemParams& params,
                      const EmissionSettings& emission);

}  // namespace wgm
