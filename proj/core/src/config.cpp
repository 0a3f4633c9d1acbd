#include "wgm/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>

#include "wgm/sweep.hpp"

namespace wgm {
namespace {

enum class Kind { length, scalar, angle };

struct Field {
  std::string_view key;
  Kind kind;
};

constexpr Field kParamFields[] = {
    {"R", Kind::length},       {"n", Kind::scalar},       {"Q0", Kind::scalar},
    {"r_s", Kind::length},     {"eps_s", Kind::scalar},   {"lambda1", Kind::length},
    {"lambda2", Kind::length}, {"w0", Kind::length},      {"s", Kind::length},
    {"f1_0", Kind::scalar},    {"f2_0", Kind::scalar},    {"phi", Kind::angle},
};

std::optional<Kind> kind_of(std::string_view key) {
  for (const auto& f : kParamFields)
    if (f.key == key) return f.kind;
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_quantity(std::string_view text, Kind kind, std::size_t line,
                      std::string_view key) {
  text = trim(text);
  const auto number_end = text.find_first_not_of("0123456789+-.eE");
  std::string_view number = text.substr(0, number_end);
  std::string_view suffix =
      number_end == std::string_view::npos ? std::string_view{} : trim(text.substr(number_end));

  const auto fail = [&](const std::string& why) {
    return ConfigError(line, std::string(key) + ": " + why);
  };
  if (number.empty()) throw fail("expected a number, got '" + std::string(text) + "'");

  std::string exponent;
  double scale = 1.0;
  switch (kind) {
    case Kind::length:
      if (suffix == "nm") exponent = "e-9";
      else if (suffix == "um") exponent = "e-6";
      else if (suffix == "m") exponent = "";
      else if (!suffix.empty())
        throw fail("unknown length unit '" + std::string(suffix) + "' (use nm, um or m)");
      break;
    case Kind::angle:
      if (!suffix.empty() && suffix != "deg")
        throw fail("angles are given in degrees ('deg' or no suffix)");
      break;
    case Kind::scalar:
      if (!suffix.empty()) throw fail("dimensionless value takes no unit suffix");
      break;
  }

  std::string literal(number);
  const bool has_exponent = literal.find_first_of("eE") != std::string::npos;
  if (!exponent.empty()) {
    if (has_exponent)
      scale = exponent == "e-9" ? 1e-9 : 1e-6;
    else
      literal += exponent;
  }
  if (!literal.empty() && literal.front() == '+') literal.erase(0, 1);

  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
  if (ec != std::errc{} || ptr != literal.data() + literal.size())
    throw fail("malformed number '" + std::string(number) + "'");
  value *= scale;

  if (kind == Kind::length && suffix.empty() && value != 0.0)
    throw fail("length requires a unit suffix (nm, um or m)");
  return value;
}

std::size_t parse_count(std::string_view text, std::size_t line, std::string_view key) {
  text = trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError(line, std::string(key) + ": expected a non-negative integer");
  return value;
}

std::vector<double> parse_axis_values(std::string_view text, Kind kind,
                                      std::size_t line, std::string_view key) {
  text = trim(text);
  const bool is_lin = text.starts_with("lin(");
  const bool is_log = text.starts_with("log(");
  if (is_lin || is_log) {
    if (!text.ends_with(")"))
      throw ConfigError(line, std::string(key) + ": missing ')'");
    const auto args = split(text.substr(4, text.size() - 5), ',');
    if (args.size() != 3)
      throw ConfigError(line, std::string(key) + ": expected (start, stop, count)");
    const double a = parse_quantity(args[0], kind, line, key);
    const double b = parse_quantity(args[1], kind, line, key);
    const std::size_t count = parse_count(args[2], line, key);
    if (count == 0) throw ConfigError(line, std::string(key) + ": count must be positive");
    if (is_log && !(a > 0.0 && b > 0.0))
      throw ConfigError(line, std::string(key) + ": log spacing needs positive bounds");

    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      values[i] = is_lin ? a + t * (b - a)
                         : std::exp(std::log(a) + t * (std::log(b) - std::log(a)));
    }
    values.front() = a;
    if (count > 1) values.back() = b;
    return values;
  }

  std::vector<double> values;
  for (auto item : split(text, ',')) values.push_back(parse_quantity(item, kind, line, key));
  return values;
}

void assign(SystemParams& p, std::string_view key, double v) {
  p = with_axis_value(std::move(p), key, v);
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message
                                 : message),
      line_(line) {}

const std::vector<std::string>& known_axes() {
  static const std::vector<std::string> axes = [] {
    std::vector<std::string> out;
    for (const auto& f : kParamFields) out.emplace_back(f.key);
    return out;
  }();
  return axes;
}

std::string axis_column(std::string_view axis) {
  const auto kind = kind_of(axis);
  if (!kind) throw std::invalid_argument("unknown axis " + std::string(axis));
  switch (*kind) {
    case Kind::length: return std::string(axis) + "_m";
    case Kind::angle: return std::string(axis) + "_deg";
    case Kind::scalar: break;
  }
  return std::string(axis);
}

SystemParams with_axis_value(SystemParams p, std::string_view axis, double v) {
  if (axis == "R") p.sphere.radius_m = v;
  else if (axis == "n") p.sphere.index = v;
  else if (axis == "Q0") p.sphere.q0 = v;
  else if (axis == "r_s") p.scatterer.radius_m = v;
  else if (axis == "eps_s") p.scatterer.permittivity = v;
  else if (axis == "lambda1") p.beam.wavelength_m = p.pump.wavelength_m = v;
  else if (axis == "lambda2") p.lasing.wavelength_m = v;
  else if (axis == "w0") p.beam.waist_m = v;
  else if (axis == "s") p.beam.waist_offset_m = v;
  else if (axis == "f1_0") p.pump.field_at_scatterer = v;
  else if (axis == "f2_0") p.lasing.field_at_scatterer = v;
  else if (axis == "phi") {
    // Emission azimuth lives in EmissionSettings; nothing to change here.
  } else {
    throw std::invalid_argument("unknown parameter " + std::string(axis));
  }
  return p;
}

SystemParams baseline_params() {
  SystemParams p;
  p.sphere = {10e-6, 1.7, 1e8};
  p.scatterer = {50e-9, 12.0};
  p.beam = {977e-9, 5e-6, 0.0};
  p.pump = {977e-9, 0.4};
  p.lasing = {1550e-9, 0.4};
  return validate(p);
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::map<std::string, double, std::less<>> values;
  std::map<std::string, std::size_t, std::less<>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "empty key");
    if (value.empty()) throw ConfigError(line_no, std::string(key) + ": empty value");
    if (auto [it, fresh] = seen.emplace(std::string(key), line_no); !fresh)
      throw ConfigError(line_no, "duplicate key '" + std::string(key) +
                                     "' (first set on line " + std::to_string(it->second) + ")");
    cfg.grid.metadata.emplace_back(std::string(key), std::string(value));

    if (key.starts_with("sweep.")) {
      const auto axis = key.substr(6);
      const auto kind = kind_of(axis);
      if (!kind) throw ConfigError(line_no, "unknown sweep axis '" + std::string(axis) + "'");
      cfg.grid.axes.push_back({std::string(axis), parse_axis_values(value, *kind, line_no, key)});
    } else if (key == "outputs") {
      for (auto name : split(value, ',')) {
        const auto& known = known_outputs();
        if (std::find(known.begin(), known.end(), name) == known.end())
          throw ConfigError(line_no, "unknown output '" + std::string(name) + "'");
        cfg.grid.outputs.emplace_back(name);
      }
    } else if (key == "normalization") {
      const auto mode = parse_normalization(value);
      if (!mode)
        throw ConfigError(line_no, "normalization must be transmitted, front or full");
      cfg.emission.normalization = *mode;
    } else if (key == "emission_grid") {
      cfg.emission.grid_size = parse_count(value, line_no, key);
      if (cfg.emission.grid_size < 1000)
        throw ConfigError(line_no, "emission_grid must be at least 1000");
    } else if (key == "emission_bins") {
      cfg.emission.bin_count = parse_count(value, line_no, key);
    } else if (const auto kind = kind_of(key)) {
      values[std::string(key)] = parse_quantity(value, *kind, line_no, key);
    } else {
      throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }

  // A swept parameter needs no base value; its first grid value stands in.
  for (const auto& axis : cfg.grid.axes)
    if (!values.contains(axis.name)) values[axis.name] = axis.values.front();

  for (std::string_view required : {"R", "n", "r_s", "eps_s", "lambda1", "lambda2", "w0"})
    if (!values.contains(required))
      throw ConfigError(0, "missing required key '" + std::string(required) + "'");

  auto fill_default = [&](std::string_view key, double value, const std::string& note) {
    if (values.contains(key)) return;
    values[std::string(key)] = value;
    cfg.notices.push_back(note);
  };
  fill_default("Q0", 1e8, "Q0 not set; using default 1e8");
  fill_default("f1_0", 0.4, "f1_0 not set; using default 0.4");
  fill_default("f2_0", values.at("f1_0"), "f2_0 not set; using f1_0");
  fill_default("s", 0.0, "s not set; beam waist placed at the sphere center");
  if (values.contains("phi")) cfg.emission.phi_deg = values.at("phi");

  SystemParams p;
  for (const auto& [key, v] : values) assign(p, key, v);
  cfg.params = validate(p);
  return cfg;
}

}  // namespace wgm
