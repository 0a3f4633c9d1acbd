#include "wgm/dataset.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wgm {
namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool parse_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  return std::get<std::string>(cell);
}

}  // namespace

std::string unit_for_column(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 9>
      kSuffixes{{{"_rad_s", "rad/s"},
                 {"_Hz", "Hz"},
                 {"_per_deg", "1/deg"},
                 {"_per_sr", "1/sr"},
                 {"_m2", "m^2"},
                 {"_deg", "deg"},
                 {"_m3", "m^3"},
                 {"_m", "m"},
                 {"_mode", "text"}}};
  for (const auto& [suffix, unit] : kSuffixes)
    if (ends_with(name, suffix)) return std::string(unit);
  return "1";
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

void Dataset::add_column(std::string name) {
  auto unit = unit_for_column(name);
  columns.push_back({std::move(name), std::move(unit)});
}

void Dataset::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("row width does not match the column count");
  rows.push_back(std::move(row));
}

void Dataset::set_provenance(std::string key, std::string value) {
  for (auto& [k, v] : provenance) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  provenance.emplace_back(std::move(key), std::move(value));
}

std::size_t Dataset::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].name == name) return i;
  throw std::out_of_range("no column named " + std::string(name));
}

double Dataset::number(std::size_t row, std::string_view column) const {
  return std::get<double>(rows.at(row).at(column_index(column)));
}

std::string to_csv(const Dataset& data) {
  std::string out;
  for (std::size_t i = 0; i < data.columns.size(); ++i) {
    if (i) out += ',';
    out += data.columns[i].name;
  }
  out += '\n';
  for (const auto& row : data.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

Dataset parse_csv(std::string_view text) {
  Dataset data;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;

    const auto fields = split_line(line);
    if (data.columns.empty()) {
      for (auto f : fields) data.add_column(std::string(f));
      continue;
    }
    if (fields.size() != data.columns.size())
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected " +
                                  std::to_string(data.columns.size()) + " fields");
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (auto f : fields) {
      double v = 0.0;
      if (parse_double(f, v))
        row.emplace_back(v);
      else
        row.emplace_back(std::string(f));
    }
    data.rows.push_back(std::move(row));
  }
  return data;
}

std::string to_json(const Dataset& data) {
  nlohmann::ordered_json doc;
  auto& columns = doc["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : data.columns)
    columns.push_back({{"name", c.name}, {"unit", c.unit}});

  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : data.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& name = data.columns[i].name;
      if (const auto* d = std::get_if<double>(&row[i])) {
        if (std::isfinite(*d))
          obj[name] = *d;
        else
          obj[name] = nullptr;
      } else {
        obj[name] = std::get<std::string>(row[i]);
      }
    }
    rows.push_back(std::move(obj));
  }

  auto& prov = doc["provenance"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : data.provenance) prov[k] = v;
  return doc.dump(2) + "\n";
}

std::string render(const Dataset& data, OutputFormat format) {
  return format == OutputFormat::csv ? to_csv(data) : to_json(data);
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

void write_dataset(const std::filesystem::path& path, const Dataset& data,
                   OutputFormat format) {
  write_text(path, render(data, format));
  if (format == OutputFormat::csv) {
    nlohmann::ordered_json prov = nlohmann::ordered_json::object();
    for (const auto& [k, v] : data.provenance) prov[k] = v;
    auto sidecar = path;
    sidecar += ".provenance.json";
    write_text(sidecar, prov.dump(2) + "\n");
  }
}

}  // namespace wgm
