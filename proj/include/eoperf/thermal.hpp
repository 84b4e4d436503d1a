// Thermal-imager recognition via the MRTD curve and the target transform
// probability function (TTPF).
//
// Units: spatial frequency in cycles/mrad, so a target of H metres at R km
// subtends H/R mrad and N = f_x * H / R cycles.
#pragma once

#include <cmath>
#include <optional>

#include "eoperf/error.hpp"
#include "eoperf/sweep.hpp"

namespace eoperf {

/// MRTD(SF) = a * exp(b * SF).
struct MrtdCurve {
  double a;  // K
  double b;  // mrad/cycle

  void validate() const {
    detail::require(a > 0.0 && std::isfinite(a), "MRTD curve: a must be > 0");
    detail::require(b > 0.0 && std::isfinite(b), "MRTD curve: b must be > 0");
  }
};

struct ThermalScenario {
  double delta_t_inherent_k;
  double target_height_m;
  MrtdCurve mrtd;
  /// Cycles across the target for 50 % recognition. No default on purpose.
  double n50;
  double attenuation_per_km;

  void validate() const {
    detail::require(delta_t_inherent_k > 0.0, "thermal scenario: delta T must be > 0");
    detail::require(target_height_m > 0.0, "thermal scenario: target height must be > 0");
    mrtd.validate();
    detail::require(n50 > 0.0, "thermal scenario: n50 must be > 0");
    detail::require(attenuation_per_km > 0.0, "thermal scenario: attenuation must be > 0");
  }
};

struct ThermalState {
  double delta_t_apparent;   // K
  double critical_subtense;  // mrad
  double max_frequency;      // cycles/mrad
  double cycles;
  double p_recognition;
};

/// dT_i * exp(-AC * R).
inline double apparent_delta_t(double delta_t_inherent_k, double attenuation_per_km, double range_km) {
  detail::require(delta_t_inherent_k > 0.0, "apparent_delta_t: inherent delta T must be > 0");
  detail::require(attenuation_per_km >= 0.0, "apparent_delta_t: attenuation must be >= 0");
  detail::require(range_km >= 0.0, "apparent_delta_t: range must be >= 0");
  return delta_t_inherent_k * std::exp(-attenuation_per_km * range_km);
}

inline double mrtd(const MrtdCurve& curve, double sf) {
  curve.validate();
  detail::require(sf >= 0.0, "mrtd: spatial frequency must be >= 0");
  return curve.a * std::exp(curve.b * sf);
}

/// Highest spatial frequency whose MRTD does not exceed delta_t_apparent.
/// Zero when delta_t_apparent <= a: not even the coarsest pattern resolves.
inline double max_resolvable_frequency(const MrtdCurve& curve, double delta_t_apparent) {
  curve.validate();
  detail::require(delta_t_apparent > 0.0, "max_resolvable_frequency: delta T must be > 0");
  if (delta_t_apparent <= curve.a) return 0.0;
  return std::log(delta_t_apparent / curve.a) / curve.b;
}

inline double resolvable_cycles(double f_x, double target_height_m, double range_km) {
  detail::require(f_x >= 0.0, "resolvable_cycles: frequency must be >= 0");
  detail::require(target_height_m > 0.0, "resolvable_cycles: target height must be > 0");
  detail::require(range_km > 0.0, "resolvable_cycles: range must be > 0");
  return f_x * (target_height_m / range_km);
}

/// x^E / (1 + x^E), x = n/n50, E = 2.7 + 0.7 x.
inline double ttpf(double n, double n50) {
  detail::require(n50 > 0.0, "ttpf: n50 must be > 0");
  detail::require(n >= 0.0, "ttpf: n must be >= 0");
  if (n == 0.0) return 0.0;
  const double x = n / n50;
  const double e = 2.7 + 0.7 * x;
  if (x <= 1.0) {
    const double xe = std::pow(x, e);
    return xe / (1.0 + xe);
  }
  // 1 / (1 + x^-E) keeps large ratios finite.
  return 1.0 / (1.0 + std::pow(x, -e));
}

inline ThermalState thermal_state(const ThermalScenario& sc, double range_km) {
  sc.validate();
  detail::require(range_km > 0.0, "thermal_state: range must be > 0");
  ThermalState s{};
  s.delta_t_apparent = apparent_delta_t(sc.delta_t_inherent_k, sc.attenuation_per_km, range_km);
  s.critical_subtense = sc.target_height_m / range_km;
  // Far enough out the apparent delta T underflows; treat as unresolvable.
  s.max_frequency =
      s.delta_t_apparent > 0.0 ? max_resolvable_frequency(sc.mrtd, s.delta_t_apparent) : 0.0;
  s.cycles = resolvable_cycles(s.max_frequency, sc.target_height_m, range_km);
  s.p_recognition = ttpf(s.cycles, sc.n50);
  return s;
}

inline SweepResult<ThermalState> thermal_sweep(const ThermalScenario& sc, double r_start,
                                               double r_end, double r_step) {
  sc.validate();
  return sweep(
      r_start, r_end, r_step, [&](double r) { return thermal_state(sc, r); },
      [](const ThermalState& s) { return s.p_recognition; });
}

/// Range at which recognition probability falls to p_target, searched over
/// [1 m, 100 km] to within 1 cm. nullopt if even 1 m is not close enough.
inline std::optional<double> recognition_range(const ThermalScenario& sc, double p_target,
                                               RangeBracket bracket = {}) {
  sc.validate();
  return crossing_range([&](double r) { return thermal_state(sc, r).p_recognition; }, p_target,
                        bracket);
}

}  // namespace eoperf
