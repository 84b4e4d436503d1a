#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "eoperf/error.hpp"
#include "eoperf/thermal.hpp"

namespace eoperf {

struct MrtdObservation {
  double sf;    // cycles/mrad
  double mrtd;  // K
};

struct FitReport {
  MrtdCurve curve;
  std::vector<double> residuals_log;  // ln(observed) - ln(predicted)
  double sse_log;
  double r_squared_log;
  std::vector<double> predicted;
};

/// Sum of squared log-space residuals of `observations` against a*exp(b*sf),
/// parameterised by (ln a, b) so that b <= 0 can be probed too.
inline double sse_log(std::span<const MrtdObservation> observations, double ln_a, double b) {
  double sse = 0.0;
  for (const auto& o : observations) {
    const double r = std::log(o.mrtd) - (ln_a + b * o.sf);
    sse += r * r;
  }
  return sse;
}

/// Ordinary least squares of ln(MRTD) on SF: ln MRTD = ln a + b SF.
inline FitReport fit_mrtd(std::span<const MrtdObservation> observations) {
  if (observations.size() < 3)
    throw FitError("fit_mrtd: need at least 3 observations, got " + std::to_string(observations.size()));
  for (std::size_t i = 0; i < observations.size(); ++i) {
    const auto& o = observations[i];
    if (!(o.mrtd > 0.0) || !std::isfinite(o.mrtd))
      throw FitError("fit_mrtd: observation " + std::to_string(i + 1) + " has non-positive MRTD");
    if (!(o.sf >= 0.0) || !std::isfinite(o.sf))
      throw FitError("fit_mrtd: observation " + std::to_string(i + 1) + " has negative spatial frequency");
  }

  const auto n = static_cast<double>(observations.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& o : observations) {
    mean_x += o.sf;
    mean_y += std::log(o.mrtd);
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& o : observations) {
    const double dx = o.sf - mean_x;
    const double dy = std::log(o.mrtd) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw FitError("fit_mrtd: all spatial frequencies are equal");

  const double b = sxy / sxx;
  const double ln_a = mean_y - b * mean_x;
  // A non-increasing curve is not an MRTD curve; a and b must stay usable downstream.
  if (!(b > 0.0))
    throw FitError("fit_mrtd: fitted growth rate is not positive (MRTD must rise with frequency)");

  FitReport report{};
  report.curve = {std::exp(ln_a), b};
  report.residuals_log.reserve(observations.size());
  report.predicted.reserve(observations.size());
  double sse = 0.0;
  for (const auto& o : observations) {
    const double fitted_log = ln_a + b * o.sf;
    const double r = std::log(o.mrtd) - fitted_log;
    report.residuals_log.push_back(r);
    report.predicted.push_back(std::exp(fitted_log));
    sse += r * r;
  }
  report.sse_log = sse;
  report.r_squared_log = syy > 0.0 ? 1.0 - sse / syy : 1.0;
  return report;
}

inline FitReport fit_mrtd(const std::vector<MrtdObservation>& observations) {
  return fit_mrtd(std::span<const MrtdObservation>(observations));
}

inline double predict(const FitReport& report, double sf) { return mrtd(report.curve, sf); }

}  // namespace eoperf
