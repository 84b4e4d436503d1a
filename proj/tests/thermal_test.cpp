#include <gtest/gtest.h>

#include <cmath>

#include "eoperf/thermal.hpp"
#include "test_scenarios.hpp"

namespace {

using eoperf::DomainError;
using eoperf::MrtdCurve;
using testing_support::thermal;

// Nominal "System I" curve; it is also the log-space fit of the System II
// observations.
constexpr MrtdCurve kCurveA{0.0106, 0.584};

TEST(ApparentDeltaT, Values) {
  EXPECT_EQ(eoperf::apparent_delta_t(1.25, 1.071, 0.0), 1.25);
  EXPECT_EQ(eoperf::apparent_delta_t(1.25, 0.0, 4.0), 1.25);
  EXPECT_NEAR(eoperf::apparent_delta_t(1.25, 1.071, 3.0), 0.05027, 1e-4);
  EXPECT_NEAR(eoperf::apparent_delta_t(1.25, 1.071, 3.0), 1.25 * std::exp(-3.213), 1e-15);
  EXPECT_THROW(eoperf::apparent_delta_t(0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(eoperf::apparent_delta_t(1.0, -1.0, 1.0), DomainError);
  EXPECT_THROW(eoperf::apparent_delta_t(1.0, 1.0, -1.0), DomainError);
}

TEST(Mrtd, KnownPredictions) {
  EXPECT_NEAR(eoperf::mrtd(kCurveA, 1.0), 0.019008, 1e-5);
  EXPECT_NEAR(eoperf::mrtd(kCurveA, 5.0), 0.196538, 2e-4);
  EXPECT_EQ(eoperf::mrtd({0.3, 2.0}, 0.0), 0.3);
  EXPECT_THROW(eoperf::mrtd(kCurveA, -1.0), DomainError);
  EXPECT_THROW(eoperf::mrtd({0.0, 1.0}, 1.0), DomainError);
  EXPECT_THROW(eoperf::mrtd({1.0, -1.0}, 1.0), DomainError);
}

TEST(MaxResolvableFrequency, InverseOfMrtd) {
  EXPECT_EQ(eoperf::max_resolvable_frequency(kCurveA, kCurveA.a), 0.0);
  EXPECT_EQ(eoperf::max_resolvable_frequency(kCurveA, kCurveA.a / 2), 0.0);
  EXPECT_NEAR(eoperf::max_resolvable_frequency(kCurveA, 0.019008), 1.0, 1e-4);
  for (double t = kCurveA.a * 1.01; t < 100.0; t *= 1.7) {
    const double f = eoperf::max_resolvable_frequency(kCurveA, t);
    EXPECT_NEAR(eoperf::mrtd(kCurveA, f), t, 1e-9 * t);
  }
  for (double sf = 0.1; sf < 20.0; sf += 0.7) {
    EXPECT_NEAR(eoperf::max_resolvable_frequency(kCurveA, eoperf::mrtd(kCurveA, sf)), sf, 1e-9 * sf);
  }
  EXPECT_THROW(eoperf::max_resolvable_frequency(kCurveA, 0.0), DomainError);
}

TEST(ResolvableCycles, Values) {
  EXPECT_EQ(eoperf::resolvable_cycles(0.0, 2.5, 3.0), 0.0);
  EXPECT_NEAR(eoperf::resolvable_cycles(1.0, 2.5, 3.0), 0.8333, 1e-4);
  EXPECT_NEAR(eoperf::resolvable_cycles(2.2, 2.5, 6.0), 0.5 * eoperf::resolvable_cycles(2.2, 2.5, 3.0), 1e-15);
  EXPECT_THROW(eoperf::resolvable_cycles(1.0, 0.0, 3.0), DomainError);
  EXPECT_THROW(eoperf::resolvable_cycles(1.0, 2.5, 0.0), DomainError);
  EXPECT_THROW(eoperf::resolvable_cycles(-1.0, 2.5, 1.0), DomainError);
}

TEST(Ttpf, Values) {
  for (double n50 : {0.5, 1.0, 3.0, 8.0}) {
    EXPECT_EQ(eoperf::ttpf(n50, n50), 0.5);
    EXPECT_EQ(eoperf::ttpf(0.0, n50), 0.0);
  }
  // E = 4.1 at N = 2 N50: 2^4.1 / (1 + 2^4.1)
  const double x = std::pow(2.0, 4.1);
  EXPECT_NEAR(eoperf::ttpf(6.0, 3.0), x / (1.0 + x), 1e-15);
  EXPECT_NEAR(eoperf::ttpf(6.0, 3.0), 0.944899, 1e-6);
  EXPECT_THROW(eoperf::ttpf(1.0, 0.0), DomainError);
  EXPECT_THROW(eoperf::ttpf(-1.0, 3.0), DomainError);
}

TEST(Ttpf, RatioOnlyAndMonotone) {
  for (double n = 0.0; n < 40.0; n += 0.37) {
    for (double k : {0.25, 2.0, 10.0}) {
      EXPECT_NEAR(eoperf::ttpf(k * n, k * 3.0), eoperf::ttpf(n, 3.0), 1e-15);
    }
  }
  double prev = 0.0;
  for (double n = 0.01; n <= 30.0; n += 0.01) {
    const double p = eoperf::ttpf(n, 3.0);
    ASSERT_GT(p, prev) << n;
    prev = p;
  }
  EXPECT_GT(eoperf::ttpf(1e6, 3.0), 1.0 - 1e-12);
  EXPECT_LE(eoperf::ttpf(1e6, 3.0), 1.0);
}

TEST(ThermalState, ChainsSteps) {
  const auto sc = thermal("tank_system_i");
  const auto s = eoperf::thermal_state(sc, 3.0);
  EXPECT_NEAR(s.delta_t_apparent, 1.25 * std::exp(-1.071 * 3.0), 1e-15);
  EXPECT_NEAR(s.critical_subtense, 2.5 / 3.0, 1e-15);
  EXPECT_NEAR(s.max_frequency, std::log(s.delta_t_apparent / 0.0106) / 0.584, 1e-12);
  EXPECT_NEAR(s.cycles, s.max_frequency * 2.5 / 3.0, 1e-12);
  EXPECT_EQ(s.p_recognition, eoperf::ttpf(s.cycles, 3.0));
}

TEST(ThermalState, LimitingCases) {
  eoperf::ThermalScenario bright{1000.0, 2.5, kCurveA, 3.0, 1e-9};
  EXPECT_GT(eoperf::thermal_state(bright, 0.2).p_recognition, 0.999);

  eoperf::ThermalScenario faint{0.005, 2.5, kCurveA, 3.0, 1.071};
  const auto s = eoperf::thermal_state(faint, 0.5);
  EXPECT_EQ(s.max_frequency, 0.0);
  EXPECT_EQ(s.cycles, 0.0);
  EXPECT_EQ(s.p_recognition, 0.0);
}

TEST(ThermalState, ScaleInvariance) {
  const auto sc = thermal("tank_system_ii");
  for (double k : {0.1, 3.0, 17.0}) {
    auto scaled = sc;
    scaled.delta_t_inherent_k *= k;
    scaled.mrtd.a *= k;
    for (double r : {0.5, 1.5, 2.5}) {
      const auto a = eoperf::thermal_state(sc, r);
      const auto b = eoperf::thermal_state(scaled, r);
      EXPECT_NEAR(a.max_frequency, b.max_frequency, 1e-12);
      EXPECT_NEAR(a.cycles, b.cycles, 1e-12);
      EXPECT_NEAR(a.p_recognition, b.p_recognition, 1e-12);
    }
  }
}

TEST(ThermalState, RejectsBadScenario) {
  auto sc = thermal("tank_system_i");
  sc.n50 = 0.0;
  EXPECT_THROW(eoperf::thermal_state(sc, 1.0), DomainError);
  EXPECT_THROW(eoperf::thermal_state(thermal("tank_system_i"), 0.0), DomainError);
}

TEST(ThermalSweep, MonotoneNonIncreasing) {
  for (const auto& name : testing_support::thermal_scenario_names()) {
    const auto sc = thermal(name);
    const auto sw = eoperf::thermal_sweep(sc, 0.1, 10.0, 0.01);
    for (std::size_t i = 1; i < sw.samples.size(); ++i) {
      ASSERT_LE(sw.samples[i].probability, sw.samples[i - 1].probability) << name << " " << i;
    }
    EXPECT_EQ(eoperf::thermal_sweep(sc, 2.0, 2.0 + 1e-9, 0.5).samples.size(), 1u);
  }
}

TEST(RecognitionRange, AgreesWithDenseSweep) {
  for (const auto& name : testing_support::thermal_scenario_names()) {
    const auto sc = thermal(name);
    const auto r = eoperf::recognition_range(sc, 0.5);
    ASSERT_TRUE(r.has_value()) << name;
    const auto sw = eoperf::thermal_sweep(sc, 0.001, 10.0, 0.001);
    std::size_t i = 1;
    while (i < sw.samples.size() && sw.samples[i].probability >= 0.5) ++i;
    ASSERT_LT(i, sw.samples.size());
    EXPECT_GE(*r, sw.samples[i - 1].range_km - 1e-4) << name;
    EXPECT_LE(*r, sw.samples[i].range_km + 1e-4) << name;
  }
}

TEST(RecognitionRange, MonotoneInTargetAndBracketEdge) {
  const auto sc = thermal("tank_system_i");
  double prev = 1e9;
  for (double p : {0.05, 0.2, 0.5, 0.8, 0.95}) {
    const auto r = eoperf::recognition_range(sc, p);
    ASSERT_TRUE(r.has_value());
    EXPECT_LE(*r, prev);
    prev = *r;
  }
  // just below P_r at the 1 m edge -> crossing sits right next to the edge
  // (a 0.5 mm target keeps P_r at 1 m well below 1)
  const eoperf::ThermalScenario tiny{1.25, 0.0005, kCurveA, 3.0, 1.071};
  const double p_edge = eoperf::thermal_state(tiny, 0.001).p_recognition;
  ASSERT_LT(p_edge, 0.99);
  const auto r_edge = eoperf::recognition_range(tiny, p_edge - 1e-9);
  ASSERT_TRUE(r_edge.has_value());
  EXPECT_LT(*r_edge, 0.0012);
  EXPECT_FALSE(eoperf::recognition_range(tiny, p_edge + 1e-6).has_value());
  // unreachable near the edge
  eoperf::ThermalScenario faint{0.001, 2.5, kCurveA, 3.0, 1.071};
  EXPECT_FALSE(eoperf::recognition_range(faint, 0.5).has_value());
  EXPECT_THROW(eoperf::recognition_range(sc, 0.0), DomainError);
  EXPECT_THROW(eoperf::recognition_range(sc, 1.0), DomainError);
}

}  // namespace
