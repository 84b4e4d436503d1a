// Visual-band detection: eye, binocular, image intensifier.
//
// Reflected luminance -> target/background contrast -> atmospheric loss of
// contrast over the path -> angular size -> photon-limited SNR -> Pd.
#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "eoperf/error.hpp"
#include "eoperf/sdt.hpp"
#include "eoperf/sweep.hpp"

namespace eoperf {

/// Visual scene and sensor. Units are the canonical ones the parser
/// normalises to.
struct VisualScenario {
  double illumination_lux;
  double target_area_m2;
  double target_reflectance;
  double background_reflectance;
  double aperture_radius_mm;
  /// System efficiency, applied once as a linear factor (e.g. 1/4200 for the eye).
  double quantum_efficiency;
  double integration_time_s;
  /// photons per lumen-second
  double photon_intensity;
  double pfa;
  double attenuation_per_km;

  void validate() const {
    detail::require(illumination_lux > 0.0, "visual scenario: illumination must be > 0");
    detail::require(target_area_m2 > 0.0, "visual scenario: target area must be > 0");
    detail::require(target_reflectance > 0.0 && target_reflectance <= 1.0,
                    "visual scenario: target reflectance must lie in (0, 1]");
    detail::require(background_reflectance > 0.0 && background_reflectance <= 1.0,
                    "visual scenario: background reflectance must lie in (0, 1]");
    detail::require(aperture_radius_mm > 0.0, "visual scenario: aperture radius must be > 0");
    detail::require(quantum_efficiency > 0.0, "visual scenario: efficiency must be > 0");
    detail::require(integration_time_s > 0.0, "visual scenario: integration time must be > 0");
    detail::require(photon_intensity > 0.0, "visual scenario: photon intensity must be > 0");
    detail::require(pfa > 0.0 && pfa < 1.0, "visual scenario: pfa must lie in (0, 1)");
    detail::require(attenuation_per_km > 0.0, "visual scenario: attenuation must be > 0");
  }
};

struct PhotometricState {
  double target_luminance;      // cd/m^2
  double background_luminance;  // cd/m^2
  double mean_luminance;        // cd/m^2
  double inherent_contrast;
  double apparent_contrast;
  double subtense_arcmin;
  double snr;
};

/// Lambertian luminance in cd/m^2: reflectance * illumination / pi.
inline double luminance(double reflectance, double illumination_lux) {
  detail::require(reflectance >= 0.0 && reflectance <= 1.0, "luminance: reflectance must lie in [0, 1]");
  detail::require(illumination_lux >= 0.0, "luminance: illumination must be >= 0");
  return reflectance * illumination_lux / std::numbers::pi;
}

/// (Lt - Lb) / (Lt + Lb), in [-1, 1].
inline double contrast(double l_target, double l_background) {
  detail::require(l_target >= 0.0 && l_background >= 0.0, "contrast: luminances must be >= 0");
  if (l_target + l_background == 0.0)
    throw DegenerateSceneError("contrast: target and background are both black");
  return (l_target - l_background) / (l_target + l_background);
}

/// Contrast seen through `range_km` of atmosphere: C * exp(-AC * R).
inline double apparent_contrast(double c, double attenuation_per_km, double range_km) {
  detail::require(attenuation_per_km >= 0.0, "apparent_contrast: attenuation must be >= 0");
  detail::require(range_km >= 0.0, "apparent_contrast: range must be >= 0");
  return c * std::exp(-attenuation_per_km * range_km);
}

inline constexpr double kArcminPerRadian = 57.3 * 60.0;

/// Angle subtended by the target's equivalent-square side sqrt(area), in arcminutes.
inline double angular_subtense(double target_area_m2, double range_km) {
  detail::require(target_area_m2 > 0.0, "angular_subtense: target area must be > 0");
  detail::require(range_km > 0.0, "angular_subtense: range must be > 0");
  return kArcminPerRadian * std::sqrt(target_area_m2) / (1000.0 * range_km);
}

/// Photon-noise SNR constant, used as given (units implied by
/// cd/m^2, arcmin, mm, s and photons/lumen-s).
inline constexpr double kPhotonSnrConstant = 2.66e-11;

inline PhotometricState visual_snr(const VisualScenario& sc, double range_km) {
  sc.validate();
  detail::require(range_km > 0.0, "visual_snr: range must be > 0");
  PhotometricState s{};
  s.target_luminance = luminance(sc.target_reflectance, sc.illumination_lux);
  s.background_luminance = luminance(sc.background_reflectance, sc.illumination_lux);
  s.mean_luminance = 0.5 * (s.target_luminance + s.background_luminance);
  s.inherent_contrast = contrast(s.target_luminance, s.background_luminance);
  s.apparent_contrast = apparent_contrast(s.inherent_contrast, sc.attenuation_per_km, range_km);
  s.subtense_arcmin = angular_subtense(sc.target_area_m2, range_km);
  // sqrt(K Lm^2 C'^2 a^2 eff P r^2 tau), with the squared factors pulled out.
  const double scale = std::sqrt(kPhotonSnrConstant * sc.quantum_efficiency * sc.photon_intensity *
                                 sc.integration_time_s);
  s.snr = scale * s.mean_luminance * std::abs(s.apparent_contrast) * s.subtense_arcmin *
          sc.aperture_radius_mm;
  return s;
}

inline double visual_pd(const VisualScenario& sc, double range_km) {
  return pd_from_snr(visual_snr(sc, range_km).snr, sc.pfa);
}

inline SweepResult<PhotometricState> visual_sweep(const VisualScenario& sc, double r_start,
                                                  double r_end, double r_step) {
  sc.validate();
  return sweep(
      r_start, r_end, r_step, [&](double r) { return visual_snr(sc, r); },
      [&](const PhotometricState& s) { return pd_from_snr(s.snr, sc.pfa); });
}

/// Range at which Pd falls to p_target (see crossing_range for the bracket).
inline std::optional<double> detection_range(const VisualScenario& sc, double p_target,
                                             RangeBracket bracket = {}) {
  sc.validate();
  return crossing_range([&](double r) { return visual_pd(sc, r); }, p_target, bracket);
}

}  // namespace eoperf
