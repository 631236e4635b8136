#include "mpa/extremum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "mpa/random.hpp"
#include "oracles.hpp"

namespace mpa {
namespace {

constexpr double pi = std::numbers::pi;

TEST(FOfX, Examples) {
  EXPECT_EQ(f_of_x({0.7, 1.1, 0.0}), 1.0);
  EXPECT_NEAR(f_of_x({0.6, 0.0, 0.75}), 0.8, 1e-15);
  EXPECT_NEAR(f_of_x({0.9, pi / 2, 2.0}), std::sqrt(5.0), 1e-15);
}

TEST(XMin, Examples) {
  EXPECT_NEAR(x_min(0.6, 0.0), 0.75, 1e-15);
  EXPECT_NEAR(x_min(0.6, pi / 2), 0.0, 1e-15);
  EXPECT_EQ(x_min(0.6, pi), 0.0);
  EXPECT_EQ(x_min(0.0, 0.3), 0.0);
  EXPECT_THROW(x_min(1.0, 0.0), std::invalid_argument);
}

TEST(XMin, ObtuseAngleClampsToOriginByScan) {
  // F increases monotonically on [0, 10] when cos(theta) <= 0.
  for (double theta : {pi / 2 + 0.1, 2.0, 3 * pi / 4, pi}) {
    double prev = f_of_x({0.8, theta, 0.0});
    for (int i = 1; i <= 10000; ++i) {
      const double f = f_of_x({0.8, theta, 10.0 * i / 10000});
      ASSERT_GT(f, prev);
      prev = f;
    }
    EXPECT_EQ(x_min(0.8, theta), 0.0);
    EXPECT_EQ(f_min(0.8, theta), 1.0);
  }
}

TEST(FMin, Examples) {
  EXPECT_NEAR(f_min(0.6, 0.0), 0.8, 1e-15);
  EXPECT_EQ(f_min(0.0, 0.4), 1.0);
  EXPECT_NEAR(f_min(0.9, 0.0), 0.4358898943540674, 1e-15);
}

TEST(RatioLowerBound, Examples) {
  EXPECT_EQ(ratio_lower_bound(0.6, 0.0), 1.0);
  EXPECT_EQ(ratio_lower_bound(0.999, 0.0), 1.0);
  EXPECT_NEAR(ratio_lower_bound(0.6, pi / 2), 1.25, 1e-15);
  EXPECT_EQ(ratio_lower_bound(0.0, 1.0), 1.0);
}

TEST(BruteForceMin, MatchesClosedForm) {
  const GridMinimum m = brute_force_min(0.6, 0.0);
  EXPECT_NEAR(m.x, 0.75, 1e-4);
  EXPECT_NEAR(m.f, 0.8, 1e-6);

  const GridMinimum flat = brute_force_min(0.0, 0.3);
  EXPECT_EQ(flat.x, 0.0);
  EXPECT_EQ(flat.f, 1.0);

  const GridMinimum steep = brute_force_min(0.99, 0.0);
  EXPECT_NEAR(steep.f, 0.1410673597966588, 1e-6);
  EXPECT_NEAR(steep.x, x_min(0.99, 0.0), 1e-4);
}

TEST(BruteForceMin, AgreesWithIndependentScan) {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const double beta = rng.uniform(0.0, 0.99);
    const double theta = rng.uniform(0.0, pi);
    const GridMinimum lib = brute_force_min(beta, theta, {10.0, 100001});
    const auto scan = oracle::scan_f(beta, theta, 10.0, 100000);
    EXPECT_NEAR(lib.f, scan[1], 1e-12);
    EXPECT_NEAR(lib.f, f_min(beta, theta), 1e-6);
    if (std::cos(theta) > 0.0) EXPECT_NEAR(lib.x, x_min(beta, theta), 1e-4 + 1e-12);
  }
}

TEST(BruteForceMin, RejectsDegenerateGrid) {
  EXPECT_THROW(brute_force_min(0.5, 0.0, {10.0, 1}), std::invalid_argument);
  EXPECT_THROW(brute_force_min(0.5, 0.0, {0.0, 100001}), std::invalid_argument);
  EXPECT_THROW(brute_force_min(0.5, 0.0, {5.0, 100001}), std::invalid_argument);
  EXPECT_THROW(brute_force_min(0.5, 0.0, {10.0, 1000}), std::invalid_argument);
}

TEST(Extremum, StationaryPointHasZeroSlope) {
  Rng rng(10);
  const double h = 1e-5;
  for (int i = 0; i < 1000; ++i) {
    const double beta = rng.uniform(0.0, 0.99);
    const double theta = rng.uniform(0.0, pi / 2 - 1e-3);
    const double x = x_min(beta, theta);
    if (x <= h) continue;
    const double slope = (f_of_x({beta, theta, x + h}) - f_of_x({beta, theta, x - h})) / (2 * h);
    ASSERT_LT(std::abs(slope), 1e-8) << beta << " " << theta;
  }
}

TEST(Extremum, MinimumIsBelowEveryGridPoint) {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const double beta = rng.uniform(0.0, 0.99);
    const double theta = rng.uniform(0.0, pi);
    const double fm = f_of_x({beta, theta, x_min(beta, theta)});
    for (int k = 0; k <= 2000; ++k) {
      ASSERT_LE(fm, f_of_x({beta, theta, 20.0 * k / 2000}) + 1e-15);
    }
  }
}

TEST(Extremum, InequalityChainHoldsForRandomScenarios) {
  Rng rng(13);
  for (int i = 0; i < 100000; ++i) {
    const BoundScenario s{rng.uniform(0.0, 0.999), rng.uniform(0.0, pi), rng.uniform(0.0, 50.0)};
    const double gamma = 1.0 / std::sqrt(1.0 - s.beta * s.beta);
    const double bound = ratio_lower_bound(s.beta, s.theta);
    ASSERT_GE(gamma * f_of_x(s), bound - 1e-12 * bound);
    ASSERT_GE(bound, 1.0 - 1e-12);
  }
}

TEST(Extremum, ScenarioMatchesKinematicRatio) {
  Rng rng(14);
  for (int i = 0; i < 10000; ++i) {
    const double a = rng.uniform(0.1, 5.0);
    const ParticleKinematics part{1.0, {}, a, {rng.uniform(-8, 8), rng.uniform(-8, 8), rng.uniform(-8, 8)}};
    const DeviceState dev{{}, {rng.uniform(-0.55, 0.55), rng.uniform(-0.55, 0.55), rng.uniform(-0.55, 0.55)}};
    const BoundScenario s = scenario_from(part, dev, 1.0);
    const double gamma = 1.0 / std::sqrt(1.0 - s.beta * s.beta);
    const double kin = accel_velocity_ratio(part, dev, 1.0);
    ASSERT_NEAR(gamma * f_of_x(s), kin, 1e-12 * kin);
  }
}

TEST(InequalityScan, SeededScanPasses) {
  const InequalityScanReport r = inequality_scan(100000, 7);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.samples, 100000u);
  EXPECT_GE(r.min_slack, -1e-12);
  EXPECT_GE(r.min_bound_excess, -1e-12);
  // Samples placed at x_min make the first inequality tight.
  EXPECT_LT(r.min_slack, 1e-12);
}

TEST(InequalityScan, Deterministic) {
  const auto a = inequality_scan(5000, 99);
  const auto b = inequality_scan(5000, 99);
  EXPECT_EQ(a.min_slack, b.min_slack);
  EXPECT_EQ(a.min_bound_excess, b.min_bound_excess);
}

TEST(BoundScenario, Validation) {
  EXPECT_NO_THROW((BoundScenario{0.5, 1.0, 2.0}.validate()));
  EXPECT_THROW((BoundScenario{1.0, 1.0, 2.0}.validate()), std::invalid_argument);
  EXPECT_THROW((BoundScenario{0.5, 4.0, 2.0}.validate()), std::invalid_argument);
  EXPECT_THROW((BoundScenario{0.5, 1.0, -1.0}.validate()), std::invalid_argument);
}

}  // namespace
}  // namespace mpa
