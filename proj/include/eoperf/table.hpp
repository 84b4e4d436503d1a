#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eoperf/error.hpp"
#include "eoperf/photometry.hpp"
#include "eoperf/text.hpp"
#include "eoperf/thermal.hpp"

namespace eoperf {

/// Locale-independent shortest general-format rendering with `digits`
/// significant digits ("0.1", "1.5e-05", "63.662").
inline std::string format_number(double v, int digits = 6) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return {buf, res.ptr};
}

/// Fixed-point rendering, for SVG coordinates.
inline std::string format_fixed(double v, int decimals = 2) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
  std::string s{buf, res.ptr};
  if (s.find_first_not_of("-0.") == std::string::npos) return decimals > 0 ? "0." + std::string(decimals, '0') : "0";
  return s;
}

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  [[nodiscard]] std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw std::invalid_argument("no column named '" + std::string(name) + "'");
  }
};

inline const std::vector<std::string>& visual_columns() {
  static const std::vector<std::string> cols{"range_km", "l_target",        "l_background",
                                             "contrast", "apparent_contrast", "subtense_arcmin",
                                             "snr",      "pd"};
  return cols;
}

inline const std::vector<std::string>& thermal_columns() {
  static const std::vector<std::string> cols{"range_km", "delta_t_apparent", "f_x", "cycles", "p_r"};
  return cols;
}

inline SweepTable make_table(const SweepResult<PhotometricState>& sweep) {
  SweepTable t{visual_columns(), {}};
  t.rows.reserve(sweep.samples.size());
  for (const auto& s : sweep.samples) {
    const auto& st = s.state;
    t.rows.push_back({s.range_km, st.target_luminance, st.background_luminance, st.inherent_contrast,
                      st.apparent_contrast, st.subtense_arcmin, st.snr, s.probability});
  }
  return t;
}

inline SweepTable make_table(const SweepResult<ThermalState>& sweep) {
  SweepTable t{thermal_columns(), {}};
  t.rows.reserve(sweep.samples.size());
  for (const auto& s : sweep.samples) {
    const auto& st = s.state;
    t.rows.push_back({s.range_km, st.delta_t_apparent, st.max_frequency, st.cycles, s.probability});
  }
  return t;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    auto line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = eol + 1;
  }
  return lines;
}

}  // namespace detail

/// Header row then one row per sample, 6 significant digits, '\n' line ends.
inline std::string write_sweep_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += detail::csv_field(table.header[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) throw std::invalid_argument("write_sweep_csv: ragged row");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

/// Reads back what write_sweep_csv produces (unquoted numeric CSV with a header).
inline SweepTable parse_sweep_csv(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, "", "empty CSV");
  SweepTable t;
  for (auto h : detail::split_commas(lines[0])) t.header.emplace_back(h);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (detail::trim(lines[i]).empty()) continue;
    const auto fields = detail::split_commas(lines[i]);
    if (fields.size() != t.header.size())
      throw ParseError(i + 1, "", "expected " + std::to_string(t.header.size()) + " fields");
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double v = 0.0;
      if (!detail::parse_double(fields[c], v)) throw ParseError(i + 1, t.header[c], "not a number");
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace eoperf
