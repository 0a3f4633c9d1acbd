#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace wgm {

using Cell = std::variant<double, std::string>;

struct Column {
  std::string name;  // carries its unit suffix, e.g. "kappa_in_rad_s"
  std::string unit;  // "rad/s", "Hz", "m", "m^2", "m^3", "deg", "1/deg", "1/sr", "1", "text"

  bool operator==(const Column&) const = default;
};

/// Rectangular table with per-column units and an ordered provenance record.
struct Dataset {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> provenance;

  /// Appends a column; the unit is derived from the name suffix.
  void add_column(std::string name);
  /// Throws std::invalid_argument unless the row matches the column count.
  void add_row(std::vector<Cell> row);
  void set_provenance(std::string key, std::string value);

  std::size_t column_index(std::string_view name) const;
  double number(std::size_t row, std::string_view column) const;

  bool operator==(const Dataset&) const = default;
};

/// Unit implied by a column-name suffix ("_rad_s" → "rad/s", ...).
std::string unit_for_column(std::string_view name);

/// 17 significant digits, locale-independent, shortest exponent form.
std::string format_number(double value);

/// Header line then one line per row, comma-separated, LF endings.
std::string to_csv(const Dataset& data);
/// Inverse of to_csv (provenance is not carried by CSV).
Dataset parse_csv(std::string_view text);

/// {"columns": [...], "rows": [{...}], "provenance": {...}}, pretty-printed.
std::string to_json(const Dataset& data);

enum class OutputFormat { csv, json };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `data` to `path`. CSV output also gets `<path>.provenance.json`.
/// Throws IoError when the file cannot be written.
void write_dataset(const std::filesystem::path& path, const Dataset& data,
                   OutputFormat format);

std::string render(const Dataset& data, OutputFormat format);

}  // namespace wgm
