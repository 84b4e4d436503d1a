// Minimal standalone SVG line chart for sweep tables. Output depends only on
// the table contents, so identical input gives byte-identical documents.
#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "eoperf/table.hpp"

namespace eoperf {

struct SvgLayout {
  int width = 640;
  int height = 420;
  int margin_left = 70;
  int margin_right = 20;
  int margin_top = 30;
  int margin_bottom = 55;
  int ticks = 5;
};

inline bool is_probability_column(std::string_view name) { return name == "pd" || name == "p_r"; }

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string write_sweep_svg(const SweepTable& table, std::string_view x_column,
                                   std::string_view y_column, const SvgLayout& layout = {}) {
  const auto find = [&](std::string_view name) {
    const auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end())
      throw std::invalid_argument("write_sweep_svg: no column named '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - table.header.begin());
  };
  const std::size_t xi = find(x_column);
  const std::size_t yi = find(y_column);
  if (table.rows.size() < 2) throw std::invalid_argument("write_sweep_svg: need at least 2 rows");

  const bool probability = is_probability_column(y_column);
  double x_min = table.rows.front()[xi];
  double x_max = x_min;
  double y_min = table.rows.front()[yi];
  double y_max = y_min;
  for (const auto& row : table.rows) {
    x_min = std::min(x_min, row[xi]);
    x_max = std::max(x_max, row[xi]);
    y_min = std::min(y_min, row[yi]);
    y_max = std::max(y_max, row[yi]);
  }
  if (probability) {
    y_min = 0.0;
    y_max = 1.0;
  } else if (y_max == y_min) {
    y_min -= 1.0;
    y_max += 1.0;
  }
  if (x_max == x_min) {
    x_min -= 1.0;
    x_max += 1.0;
  }

  const double plot_w = layout.width - layout.margin_left - layout.margin_right;
  const double plot_h = layout.height - layout.margin_top - layout.margin_bottom;
  const double left = layout.margin_left;
  const double top = layout.margin_top;
  const double bottom = top + plot_h;
  const double right = left + plot_w;
  const auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  const auto py = [&](double y) {
    if (probability) y = std::clamp(y, 0.0, 1.0);
    return bottom - (y - y_min) / (y_max - y_min) * plot_h;
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(layout.width) +
         "\" height=\"" + std::to_string(layout.height) + "\" viewBox=\"0 0 " +
         std::to_string(layout.width) + " " + std::to_string(layout.height) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(layout.width) + "\" height=\"" +
         std::to_string(layout.height) + "\" fill=\"white\"/>\n";

  // axes
  svg += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<line x1=\"" + format_fixed(left) + "\" y1=\"" + format_fixed(bottom) + "\" x2=\"" +
         format_fixed(right) + "\" y2=\"" + format_fixed(bottom) + "\"/>\n";
  svg += "<line x1=\"" + format_fixed(left) + "\" y1=\"" + format_fixed(top) + "\" x2=\"" +
         format_fixed(left) + "\" y2=\"" + format_fixed(bottom) + "\"/>\n";
  for (int i = 0; i <= layout.ticks; ++i) {
    const double f = static_cast<double>(i) / layout.ticks;
    const double tx = left + f * plot_w;
    const double ty = bottom - f * plot_h;
    svg += "<line x1=\"" + format_fixed(tx) + "\" y1=\"" + format_fixed(bottom) + "\" x2=\"" +
           format_fixed(tx) + "\" y2=\"" + format_fixed(bottom + 5) + "\"/>\n";
    svg += "<line x1=\"" + format_fixed(left - 5) + "\" y1=\"" + format_fixed(ty) + "\" x2=\"" +
           format_fixed(left) + "\" y2=\"" + format_fixed(ty) + "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int i = 0; i <= layout.ticks; ++i) {
    const double f = static_cast<double>(i) / layout.ticks;
    svg += "<text x=\"" + format_fixed(left + f * plot_w) + "\" y=\"" + format_fixed(bottom + 18) +
           "\" text-anchor=\"middle\">" + format_number(x_min + f * (x_max - x_min), 4) + "</text>\n";
    svg += "<text x=\"" + format_fixed(left - 8) + "\" y=\"" + format_fixed(bottom - f * plot_h + 4) +
           "\" text-anchor=\"end\">" + format_number(y_min + f * (y_max - y_min), 4) + "</text>\n";
  }
  svg += "<text x=\"" + format_fixed(left + 0.5 * plot_w) + "\" y=\"" +
         format_fixed(layout.height - 12.0) + "\" text-anchor=\"middle\">" +
         detail::xml_escape(x_column) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + format_fixed(top + 0.5 * plot_h) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + format_fixed(top + 0.5 * plot_h) +
         ")\">" + detail::xml_escape(y_column) + "</text>\n";
  svg += "</g>\n";

  svg += "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (i) svg += ' ';
    svg += format_fixed(px(table.rows[i][xi])) + "," + format_fixed(py(table.rows[i][yi]));
  }
  svg += "\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace eoperf
