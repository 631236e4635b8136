#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mpa/kinematics.hpp"

namespace mpa {

/// beta = |u|/c in [0, 1), theta = angle between a and u in [0, pi],
/// x = |a|/a >= 0.
struct BoundScenario {
  double beta = 0.0;
  double theta = 0.0;
  double x = 0.0;

  void validate() const;
};

/// F(x) = (1 + x^2)^{1/2} - beta x cos(theta).
double f_of_x(const BoundScenario& s);

/// Minimiser of F over x >= 0. The stationary point
/// beta cos(theta) / (1 - beta^2 cos^2 theta)^{1/2} when cos(theta) > 0,
/// otherwise 0 (F is increasing on the whole physical domain).
double x_min(double beta, double theta);

/// F(x_min): (1 - beta^2 cos^2 theta)^{1/2} for cos(theta) > 0, else 1.
double f_min(double beta, double theta);

/// gamma * f_min = ((1 - beta^2 cos^2 theta) / (1 - beta^2))^{1/2} >= 1.
double ratio_lower_bound(double beta, double theta);

/// Extracts (beta, theta, |a|/a) from a particle/device pair. When either
/// |a| or |u| vanishes the angle is irrelevant and reported as 0.
BoundScenario scenario_from(const ParticleKinematics& part, const DeviceState& dev, double c);

struct GridSpec {
  double x_hi = 10.0;
  std::size_t points = 100001;
};

struct GridMinimum {
  double x = 0.0;
  double f = 0.0;
};

/// Exhaustive scan of F over an equispaced grid on [0, x_hi]. Ties resolve
/// to the smaller x. Requires x_hi >= 10 and at least 1e5 points.
GridMinimum brute_force_min(double beta, double theta, const GridSpec& grid = {});

struct BoundViolation {
  double beta;
  double theta;
  double x;
  double gamma_f;
  double bound;
};

struct InequalityScanReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  /// Smallest (gamma F - bound) / max(1, bound) seen.
  double min_slack = 0.0;
  /// Smallest bound - 1 seen.
  double min_bound_excess = 0.0;
  std::vector<BoundViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Draws `samples` seeded scenarios and checks
/// gamma F(x) >= ratio_lower_bound >= 1 up to a scale-relative `tolerance`.
/// Every tenth sample sits exactly at x_min, where the first inequality is
/// tight.
InequalityScanReport inequality_scan(std::size_t samples, std::uint64_t seed, double tolerance = 1e-12);

}  // namespace mpa
