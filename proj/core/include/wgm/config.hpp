#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wgm/emission.hpp"
#include "wgm/params.hpp"

namespace wgm {

/// One sweep axis: a parameter name and the values it takes, in SI units
/// (degrees for phi).
struct Axis {
  std::string name;
  std::vector<double> values;

  bool operator==(const Axis&) const = default;
};

struct SweepGrid {
  std::vector<Axis> axes;            // row-major: first axis varies slowest
  std::vector<std::string> outputs;  // names from known_outputs()
  std::vector<std::pair<std::string, std::string>> metadata;
};

struct EmissionSettings {
  double phi_deg = 0.0;
  Normalization normalization = Normalization::transmitted;
  std::size_t grid_size = 400'000;
  std::size_t bin_count = 0;
};

struct RunConfig {
  SystemParams params;  // validated
  SweepGrid grid;
  EmissionSettings emission;
  std::vector<std::string> notices;  // defaults that were filled in
};

/// Parse or semantic error in a configuration file. `line()` is 0 when the
/// problem is not tied to one line (e.g. a missing key).
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Flat `key = value` text with `#` comments. Lengths take a unit suffix
/// (nm, um, m). Sweep axes are written `sweep.<param> = ...` with either a
/// comma list, `lin(a, b, count)` or `log(a, b, count)`. Unknown keys are
/// rejected. Validation failures surface as ValidationError.
RunConfig parse_config(std::string_view text);

/// Parameter names accepted as sweep axes.
const std::vector<std::string>& known_axes();

/// Column name an axis is written under (e.g. "r_s" → "r_s_m").
std::string axis_column(std::string_view axis);

/// Returns `params` with one axis value applied (not revalidated).
SystemParams with_axis_value(SystemParams params, std::string_view axis,
                             double value);

/// The baseline system: R = 10 µm, n = 1.7, r_s = 50 nm, eps_s = 12,
/// λ1 = 977 nm, λ2 = 1550 nm, w0 = 5 µm, s = 0, f(0) = 0.4, Q0 = 1e8.
SystemParams baseline_params();

}  // namespace wgm
