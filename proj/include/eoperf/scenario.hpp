// Scenario files: a flat, line-oriented `key = value [unit]` format.
//
//   # comment (to end of line, anywhere)
//   format = 1
//   kind = visual            # or thermal
//   name = tank_daylight_binocular
//   illumination = 1000 lux
//   aperture_radius = 8.0 cm
//   quantum_efficiency = 1/4200
//   meta.f_number = F/2.0    # free text, carried but never used
//
// Every parameter of the chosen kind must appear exactly once; anything else
// except `meta.*` is rejected. Values are decimal numbers or ratios `n/d`. The
// unit may be omitted, in which case the canonical unit (first in the table
// below) is assumed.
#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eoperf/error.hpp"
#include "eoperf/photometry.hpp"
#include "eoperf/text.hpp"
#include "eoperf/thermal.hpp"

namespace eoperf {

enum class ScenarioKind { visual, thermal };

inline std::string_view to_string(ScenarioKind k) {
  return k == ScenarioKind::visual ? "visual" : "thermal";
}

struct UnitFactor {
  std::string_view unit;
  double to_canonical;
};

struct ParameterSpec {
  std::string_view key;
  std::span<const UnitFactor> units;  // units.front() is canonical
};

namespace units {
inline constexpr UnitFactor none[] = {{"", 1.0}};
inline constexpr UnitFactor lux[] = {{"lux", 1.0}};
inline constexpr UnitFactor area[] = {{"m2", 1.0}, {"cm2", 1e-4}};
inline constexpr UnitFactor fraction[] = {{"", 1.0}, {"%", 0.01}};
inline constexpr UnitFactor aperture[] = {{"mm", 1.0}, {"cm", 10.0}};
inline constexpr UnitFactor time[] = {{"s", 1.0}, {"ms", 1e-3}};
inline constexpr UnitFactor photon_rate[] = {{"", 1.0}, {"photons/lm/s", 1.0}};
inline constexpr UnitFactor attenuation[] = {{"1/km", 1.0}, {"1/m", 1000.0}};
// Temperature *differences*: a kelvin and a degree Celsius are the same size.
inline constexpr UnitFactor delta_t[] = {{"K", 1.0}, {"C", 1.0}};
inline constexpr UnitFactor length[] = {{"m", 1.0}, {"cm", 0.01}};
inline constexpr UnitFactor mrtd_rate[] = {{"mrad", 1.0}};
inline constexpr UnitFactor cycles[] = {{"", 1.0}, {"cycles", 1.0}};
}  // namespace units

inline constexpr ParameterSpec kVisualParameters[] = {
    {"illumination", units::lux},
    {"target_area", units::area},
    {"target_reflectance", units::fraction},
    {"background_reflectance", units::fraction},
    {"aperture_radius", units::aperture},
    {"quantum_efficiency", units::none},
    {"integration_time", units::time},
    {"photon_intensity", units::photon_rate},
    {"pfa", units::none},
    {"attenuation", units::attenuation},
};

inline constexpr ParameterSpec kThermalParameters[] = {
    {"delta_t_inherent", units::delta_t},
    {"target_height", units::length},
    {"mrtd_a", units::delta_t},
    {"mrtd_b", units::mrtd_rate},
    {"n50", units::cycles},
    {"attenuation", units::attenuation},
};

inline std::span<const ParameterSpec> parameter_specs(ScenarioKind kind) {
  if (kind == ScenarioKind::visual) return kVisualParameters;
  return kThermalParameters;
}

struct ScenarioParameter {
  double value;      // canonical units
  std::string unit;  // as written; empty if omitted
  std::size_t line;
};

struct ScenarioFile {
  ScenarioKind kind;
  std::string name;
  std::map<std::string, ScenarioParameter> parameters;
  std::map<std::string, std::string> metadata;  // meta.* keys, prefix stripped

  [[nodiscard]] double get(const std::string& key) const {
    const auto it = parameters.find(key);
    if (it == parameters.end()) throw ParseError(0, key, "missing required key");
    return it->second.value;
  }

  [[nodiscard]] VisualScenario visual() const {
    if (kind != ScenarioKind::visual) throw ParseError(0, "kind", "scenario '" + name + "' is not visual");
    return VisualScenario{get("illumination"),       get("target_area"),
                          get("target_reflectance"), get("background_reflectance"),
                          get("aperture_radius"),    get("quantum_efficiency"),
                          get("integration_time"),   get("photon_intensity"),
                          get("pfa"),                get("attenuation")};
  }

  [[nodiscard]] ThermalScenario thermal() const {
    if (kind != ScenarioKind::thermal) throw ParseError(0, "kind", "scenario '" + name + "' is not thermal");
    return ThermalScenario{get("delta_t_inherent"), get("target_height"),
                           MrtdCurve{get("mrtd_a"), get("mrtd_b")}, get("n50"), get("attenuation")};
  }
};

namespace detail {

struct RawEntry {
  std::string value;
  std::size_t line;
};

}  // namespace detail

inline ScenarioFile parse_scenario(std::string_view text) {
  std::map<std::string, detail::RawEntry> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "", "expected 'key = value'");
    const std::string key{detail::trim(line.substr(0, eq))};
    const std::string value{detail::trim(line.substr(eq + 1))};
    if (key.empty()) throw ParseError(line_no, "", "empty key");
    if (value.empty()) throw ParseError(line_no, key, "empty value");
    if (!raw.emplace(key, detail::RawEntry{value, line_no}).second)
      throw ParseError(line_no, key, "duplicate key (first set on line " +
                                         std::to_string(raw.at(key).line) + ")");
  }

  const auto take = [&](const std::string& key) {
    const auto it = raw.find(key);
    if (it == raw.end()) throw ParseError(0, key, "missing required key");
    auto entry = it->second;
    raw.erase(it);
    return entry;
  };

  const auto format = take("format");
  if (format.value != "1") throw ParseError(format.line, "format", "unsupported format '" + format.value + "'");

  ScenarioFile out{};
  const auto kind = take("kind");
  if (kind.value == "visual") {
    out.kind = ScenarioKind::visual;
  } else if (kind.value == "thermal") {
    out.kind = ScenarioKind::thermal;
  } else {
    throw ParseError(kind.line, "kind", "expected 'visual' or 'thermal', got '" + kind.value + "'");
  }
  out.name = take("name").value;

  const auto specs = parameter_specs(out.kind);
  for (const auto& [key, entry] : raw) {
    if (key.rfind("meta.", 0) == 0 && key.size() > 5) {
      out.metadata.emplace(key.substr(5), entry.value);
      continue;
    }
    if (std::none_of(specs.begin(), specs.end(), [&](const ParameterSpec& p) { return p.key == key; }))
      throw ParseError(entry.line, key,
                       "unknown key for " + std::string(to_string(out.kind)) + " scenario");
  }

  for (const auto& spec : specs) {
    const std::string key{spec.key};
    const auto entry = take(key);
    std::istringstream tokens(entry.value);
    std::string number;
    std::string unit;
    std::string extra;
    tokens >> number >> unit >> extra;
    if (!extra.empty()) throw ParseError(entry.line, key, "unexpected trailing text '" + extra + "'");
    double value = 0.0;
    if (!detail::parse_value(number, value))
      throw ParseError(entry.line, key, "not a number: '" + number + "'");
    const auto unit_it = unit.empty() ? spec.units.begin()
                                      : std::find_if(spec.units.begin(), spec.units.end(),
                                                     [&](const UnitFactor& u) { return u.unit == unit; });
    if (unit_it == spec.units.end()) {
      std::string allowed;
      for (const auto& u : spec.units) {
        if (u.unit.empty()) continue;
        if (!allowed.empty()) allowed += "|";
        allowed += u.unit;
      }
      throw ParseError(entry.line, key,
                       "bad unit '" + unit + "'" + (allowed.empty() ? " (dimensionless)" : " (expected " + allowed + ")"));
    }
    out.parameters.emplace(key, ScenarioParameter{value * unit_it->to_canonical, unit, entry.line});
  }

  try {
    if (out.kind == ScenarioKind::visual) out.visual().validate(); else out.thermal().validate();
  } catch (const DomainError& e) {
    throw ParseError(0, "", e.what());
  }
  return out;
}

inline ScenarioFile load_scenario(const std::string& path) { return parse_scenario(read_text_file(path)); }

}  // namespace eoperf
