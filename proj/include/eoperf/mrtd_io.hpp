// MRTD observation CSV input (`sf,mrtd` header required) and FitReport output.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eoperf/mrtd_fit.hpp"
#include "eoperf/table.hpp"
#include "eoperf/text.hpp"

namespace eoperf {

inline std::vector<MrtdObservation> parse_observations_csv(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && detail::trim(lines[first]).empty()) ++first;
  if (first == lines.size()) throw ParseError(1, "", "empty observation file");
  const auto header = detail::split_commas(lines[first]);
  if (header.size() != 2 || header[0] != "sf" || header[1] != "mrtd")
    throw ParseError(first + 1, "", "header must be 'sf,mrtd'");

  std::vector<MrtdObservation> out;
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    if (detail::trim(lines[i]).empty()) continue;
    const auto fields = detail::split_commas(lines[i]);
    if (fields.size() != 2) throw ParseError(i + 1, "", "expected 2 fields");
    MrtdObservation o{};
    if (!detail::parse_double(fields[0], o.sf)) throw ParseError(i + 1, "sf", "not a number");
    if (!detail::parse_double(fields[1], o.mrtd)) throw ParseError(i + 1, "mrtd", "not a number");
    out.push_back(o);
  }
  return out;
}

inline nlohmann::ordered_json fit_report_json(const FitReport& report,
                                              const std::vector<MrtdObservation>& observations) {
  nlohmann::ordered_json j;
  j["model"] = "mrtd = a * exp(b * sf)";
  j["a"] = report.curve.a;
  j["b"] = report.curve.b;
  j["sse_log"] = report.sse_log;
  j["r_squared_log"] = report.r_squared_log;
  j["points"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < observations.size(); ++i) {
    j["points"].push_back({{"sf", observations[i].sf},
                           {"observed", observations[i].mrtd},
                           {"predicted", report.predicted[i]},
                           {"residual_log", report.residuals_log[i]}});
  }
  j["residuals_log"] = report.residuals_log;
  j["predicted"] = report.predicted;
  return j;
}

inline std::string write_fit_csv(const FitReport& report, const std::vector<MrtdObservation>& observations) {
  SweepTable t{{"sf", "observed", "predicted", "residual_log"}, {}};
  for (std::size_t i = 0; i < observations.size(); ++i)
    t.rows.push_back({observations[i].sf, observations[i].mrtd, report.predicted[i], report.residuals_log[i]});
  return write_sweep_csv(t);
}

}  // namespace eoperf
