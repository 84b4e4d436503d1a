#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "eoperf/error.hpp"

namespace eoperf {

/// One range sample of a sweep: the model's intermediate state plus the
/// resulting probability (detection or recognition).
template <typename State>
struct SweepSample {
  double range_km;
  State state;
  double probability;
};

/// Range samples in strictly increasing order. Never empty.
template <typename State>
struct SweepResult {
  std::vector<SweepSample<State>> samples;
};

/// Inclusive range grid r_start + i*r_step. The end point is included when the
/// step divides the interval (to 1e-9 of a step); a trailing partial step is dropped.
inline std::vector<double> range_grid(double r_start, double r_end, double r_step) {
  detail::require(std::isfinite(r_start) && std::isfinite(r_end) && std::isfinite(r_step),
                  "range grid: bounds must be finite");
  detail::require(r_start > 0.0, "range grid: start must be > 0");
  detail::require(r_end > r_start, "range grid: end must exceed start");
  detail::require(r_step > 0.0, "range grid: step must be > 0");
  const double span = (r_end - r_start) / r_step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) grid.push_back(r_start + static_cast<double>(i) * r_step);
  return grid;
}

/// Evaluates `model(range) -> State` and `probability(state) -> double` on a grid.
template <typename Model, typename Prob>
auto sweep(double r_start, double r_end, double r_step, Model&& model, Prob&& probability) {
  using State = decltype(model(r_start));
  SweepResult<State> out;
  const auto grid = range_grid(r_start, r_end, r_step);
  out.samples.reserve(grid.size());
  for (double r : grid) {
    State s = model(r);
    const double p = probability(s);
    out.samples.push_back({r, std::move(s), p});
  }
  return out;
}

/// Bracket used when searching for the range at which a probability is reached.
struct RangeBracket {
  double near_km = 0.001;
  double far_km = 100.0;
  double tolerance_km = 1e-5;
};

/// Range at which a non-increasing probability-vs-range curve crosses
/// p_target, by bisection. nullopt when the curve is already below p_target at
/// the near edge. Returns the far edge if the curve never drops to p_target.
template <typename ProbAtRange>
std::optional<double> crossing_range(ProbAtRange&& prob_at, double p_target,
                                     RangeBracket bracket = {}) {
  detail::require(p_target > 0.0 && p_target < 1.0, "crossing range: p_target must lie in (0, 1)");
  if (prob_at(bracket.near_km) < p_target) return std::nullopt;
  double lo = bracket.near_km;
  double hi = bracket.far_km;
  if (prob_at(hi) >= p_target) return hi;
  // invariant: prob(lo) >= p_target > prob(hi)
  while (hi - lo > bracket.tolerance_km) {
    const double mid = 0.5 * (lo + hi);
    if (prob_at(mid) >= p_target) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace eoperf
