#ifndef HANKELND_IO_HPP
#define HANKELND_IO_HPP

// CSV and JSON serialization of SampledField. Needs nlohmann/json on the
// include path.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "hankelnd/errors.hpp"
#include "hankelnd/tensor.hpp"

namespace hankelnd {

/// 17 significant digits; round-trips every double, locale independent.
inline std::string format_csv(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

/// Shortest representation that round-trips, always with a decimal point
/// or exponent ("1.0", "2.404825557695773").
inline std::string format_shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, r.ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
  return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline void write_csv(const SampledField& field, std::ostream& out) {
  const TensorGrid& g = field.grid();
  for (std::size_t j = 0; j < g.dims(); ++j) out << "x_" << j + 1 << ',';
  out << "value\n";
  for (std::size_t flat = 0; flat < field.size(); ++flat) {
    for (double x : g.point(flat)) out << format_csv(x) << ',';
    out << format_csv(field[flat]) << '\n';
  }
}

inline nlohmann::json to_json(const SampledField& field) {
  const TensorGrid& g = field.grid();
  nlohmann::json axes = nlohmann::json::array();
  nlohmann::json bounds = nlohmann::json::array();
  for (std::size_t j = 0; j < g.dims(); ++j) {
    axes.push_back(g.axis(j));
    bounds.push_back({g.bounds(j).lo, g.bounds(j).hi});
  }
  nlohmann::json out = {{"dims", g.dims()}, {"shape", g.shape()}, {"order", "row-major, axis 1 slowest"},
                        {"axes", axes},     {"bounds", bounds},   {"values", field.values()}};
  if (!field.flags().empty()) {
    std::vector<std::size_t> flagged;
    for (std::size_t i = 0; i < field.size(); ++i) {
      if (field.flagged(i)) flagged.push_back(i);
    }
    out["boundary_points"] = flagged;
  }
  return out;
}

inline void write_json(const SampledField& field, std::ostream& out) { out << to_json(field).dump(2) << '\n'; }

enum class Format { csv, json };

inline void write_field(const SampledField& field, const std::string& path, Format format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (format == Format::csv) {
    write_csv(field, out);
  } else {
    write_json(field, out);
  }
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

/// Reads CSV rows x_1,...,x_n,value. A non-numeric first row is taken as a
/// header; blank lines and lines starting with '#' are skipped. Rows may come
/// in any order but must cover a full tensor grid exactly once.
inline SampledField read_profile(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> row_lines;
  std::string line;
  std::size_t lineno = 0;
  std::size_t columns = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto cells = detail::split(t, ',');
    std::vector<double> row;
    bool numeric = true;
    for (auto c : cells) {
      double v = 0.0;
      if (!detail::parse_double(c, v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (!seen_data && rows.empty() && columns == 0) {
        columns = cells.size();
        seen_data = true;  // header consumed
        continue;
      }
      throw ParseError(lineno, "non-numeric field in '" + std::string(t) + "'");
    }
    seen_data = true;
    if (columns == 0) columns = row.size();
    if (row.size() != columns) {
      throw ParseError(lineno, "expected " + std::to_string(columns) + " columns, got " + std::to_string(row.size()));
    }
    if (columns < 2) throw ParseError(lineno, "need at least one coordinate and a value");
    for (double v : row) {
      if (!std::isfinite(v)) throw ParseError(lineno, "non-finite number");
    }
    rows.push_back(std::move(row));
    row_lines.push_back(lineno);
  }
  if (rows.empty()) throw ParseError(lineno, "no data rows");

  const std::size_t dims = columns - 1;
  std::vector<std::vector<double>> axes(dims);
  for (std::size_t j = 0; j < dims; ++j) {
    for (const auto& r : rows) axes[j].push_back(r[j]);
    std::sort(axes[j].begin(), axes[j].end());
    axes[j].erase(std::unique(axes[j].begin(), axes[j].end()), axes[j].end());
  }
  TensorGrid grid(axes);
  if (grid.size() != rows.size()) {
    throw GridError("points do not form a tensor grid: " + std::to_string(rows.size()) + " rows for " +
                    std::to_string(grid.size()) + " grid points");
  }
  const auto strides = grid.strides();
  std::vector<double> values(rows.size());
  std::vector<bool> filled(rows.size(), false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t flat = 0;
    for (std::size_t j = 0; j < dims; ++j) {
      const auto it = std::lower_bound(axes[j].begin(), axes[j].end(), rows[r][j]);
      flat += static_cast<std::size_t>(it - axes[j].begin()) * strides[j];
    }
    if (filled[flat]) throw GridError("duplicate grid point on line " + std::to_string(row_lines[r]));
    filled[flat] = true;
    values[flat] = rows[r][dims];
  }
  return SampledField(std::move(grid), std::move(values));
}

inline SampledField read_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_profile(in);
}

}  // namespace hankelnd

#endif  // HANKELND_IO_HPP
