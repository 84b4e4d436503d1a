// Gaussian signal-detection relations between SNR, false-alarm probability,
// detection probability and decision threshold.
//
// Noise-only amplitudes are N(0,1), signal-plus-noise amplitudes N(k,1) with k
// the SNR. A threshold T gives
//
//   Pfa = 1 - Phi(T)        Pd = 1 - Phi(T - k)
//
// so T = Phi^-1(1 - Pfa) and Pd = 1 - Phi(Phi^-1(1 - Pfa) - k).
//
// Note on naming: older electro-optics literature writes the standard normal
// CDF Phi as "erf". Everything here uses normal_cdf / normal_quantile; none
// of it is the conventional error function erf(x) = 2/sqrt(pi) int_0^x e^-t^2.
#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "eoperf/error.hpp"

namespace eoperf {

/// Standard normal CDF, Phi(x).
inline double normal_cdf(double x) {
  detail::require(std::isfinite(x), "normal_cdf: argument must be finite");
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

namespace detail {

// Rational initial guess for the lower half (p <= 0.5), relative error ~1e-9.
inline double quantile_guess_lower(double p) {
  constexpr std::array<double, 6> a{-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
  constexpr std::array<double, 5> b{-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
  constexpr std::array<double, 6> c{-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
  constexpr std::array<double, 4> d{7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_tail = 0.02425;

  if (p < p_tail) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

inline double quantile_lower(double p) {
  constexpr double sqrt_2pi = 2.50662827463100050242;
  double x = quantile_guess_lower(p);
  // Halley steps against normal_cdf. The second one only matters in the far tail.
  for (int i = 0; i < 2; ++i) {
    const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
    const double u = e * sqrt_2pi * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
  }
  return x;
}

}  // namespace detail

/// Inverse of normal_cdf. Throws DomainError unless 0 < p < 1.
inline double normal_quantile(double p) {
  detail::require(p > 0.0 && p < 1.0, "normal_quantile: probability must lie in (0, 1)");
  if (p == 0.5) return 0.0;
  // 1 - p is exact for p >= 0.5, so the upper half reuses the lower-tail path
  // and the result is antisymmetric bit for bit.
  return p < 0.5 ? detail::quantile_lower(p) : -detail::quantile_lower(1.0 - p);
}

/// Decision threshold T whose noise-only upper tail mass is pfa.
inline double threshold_from_pfa(double pfa) {
  detail::require(pfa > 0.0 && pfa < 1.0, "threshold_from_pfa: pfa must lie in (0, 1)");
  // Phi^-1(1 - pfa) == -Phi^-1(pfa); the right side avoids rounding 1 - pfa.
  return -normal_quantile(pfa);
}

/// Detection probability of an ideal observer at the given SNR and false-alarm rate.
/// Equals pfa at snr == 0 and increases strictly with snr.
inline double pd_from_snr(double snr, double pfa) {
  detail::require(std::isfinite(snr) && snr >= 0.0, "pd_from_snr: snr must be finite and >= 0");
  const double threshold = threshold_from_pfa(pfa);
  if (snr == 0.0) return pfa;
  // 1 - Phi(T - k) == Phi(k - T), evaluated without cancellation.
  return normal_cdf(snr - threshold);
}

struct SnrRequirement {
  double snr = 0.0;
  /// Set when pd < pfa: representable, but no physical scene produces it.
  bool pd_below_pfa = false;
};

/// SNR an ideal observer needs to reach pd at the given pfa (inverse of pd_from_snr).
inline SnrRequirement snr_required(double pd, double pfa) {
  detail::require(pd > 0.0 && pd < 1.0, "snr_required: pd must lie in (0, 1)");
  detail::require(pfa > 0.0 && pfa < 1.0, "snr_required: pfa must lie in (0, 1)");
  // Phi^-1(1 - pfa) - Phi^-1(1 - pd), rewritten by antisymmetry.
  const double k = normal_quantile(pd) - normal_quantile(pfa);
  return {k, k < 0.0};
}

/// One consistent (k, Pfa, Pd, T) operating point.
struct SdtPoint {
  double snr;
  double pfa;
  double pd;
  double threshold;

  static SdtPoint at(double snr, double pfa) {
    return {snr, pfa, pd_from_snr(snr, pfa), threshold_from_pfa(pfa)};
  }
};

}  // namespace eoperf
