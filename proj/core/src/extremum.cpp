#include "mpa/extremum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "mpa/random.hpp"

namespace mpa {
namespace {

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in [0, 1)");
}

}  // namespace

void BoundScenario::validate() const {
  check_beta(beta);
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("theta must lie in [0, pi]");
  }
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("x must be >= 0");
}

double f_of_x(const BoundScenario& s) {
  return std::hypot(1.0, s.x) - s.beta * s.x * std::cos(s.theta);
}

double x_min(double beta, double theta) {
  check_beta(beta);
  const double bc = beta * std::cos(theta);
  if (bc <= 0.0) return 0.0;
  return bc / std::sqrt(1.0 - bc * bc);
}

double f_min(double beta, double theta) {
  check_beta(beta);
  const double bc = beta * std::cos(theta);
  if (bc <= 0.0) return 1.0;
  return std::sqrt(1.0 - bc * bc);
}

double ratio_lower_bound(double beta, double theta) {
  check_beta(beta);
  const double bc = beta * std::cos(theta);
  return std::sqrt((1.0 - bc * bc) / (1.0 - beta * beta));
}

BoundScenario scenario_from(const ParticleKinematics& part, const DeviceState& dev, double c) {
  if (!(part.proper_accel > 0.0)) throw std::domain_error("proper acceleration must be > 0");
  const double speed = dev.velocity3.norm();
  const double accel = part.accel3.norm();
  BoundScenario s;
  s.beta = speed / c;
  s.x = accel / part.proper_accel;
  if (speed > 0.0 && accel > 0.0) {
    const double cosine = std::clamp(part.accel3.dot(dev.velocity3) / (speed * accel), -1.0, 1.0);
    s.theta = std::acos(cosine);
  }
  return s;
}

GridMinimum brute_force_min(double beta, double theta, const GridSpec& grid) {
  check_beta(beta);
  if (grid.points < 2 || !(grid.x_hi > 0.0)) throw std::invalid_argument("degenerate grid");
  if (grid.x_hi < 10.0 || grid.points < 100000) {
    throw std::invalid_argument("grid must cover [0, >=10] with >= 1e5 points");
  }
  const double step = grid.x_hi / static_cast<double>(grid.points - 1);
  GridMinimum best{0.0, f_of_x({beta, theta, 0.0})};
  for (std::size_t i = 1; i < grid.points; ++i) {
    const double x = static_cast<double>(i) * step;
    const double f = f_of_x({beta, theta, x});
    if (f < best.f) best = {x, f};
  }
  return best;
}

InequalityScanReport inequality_scan(std::size_t samples, std::uint64_t seed, double tolerance) {
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
  Rng rng(seed);
  InequalityScanReport report;
  report.samples = samples;
  report.seed = seed;
  report.tolerance = tolerance;
  report.min_slack = std::numeric_limits<double>::infinity();
  report.min_bound_excess = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < samples; ++i) {
    BoundScenario s;
    s.beta = rng.uniform(0.0, 0.999);
    s.theta = rng.uniform(0.0, std::numbers::pi);
    s.x = (i % 10 == 0) ? x_min(s.beta, s.theta) : rng.uniform(0.0, 20.0);

    const double gamma = 1.0 / std::sqrt(1.0 - s.beta * s.beta);
    const double gamma_f = gamma * f_of_x(s);
    const double bound = ratio_lower_bound(s.beta, s.theta);
    const double slack = (gamma_f - bound) / std::max(1.0, bound);
    const double excess = bound - 1.0;
    report.min_slack = std::min(report.min_slack, slack);
    report.min_bound_excess = std::min(report.min_bound_excess, excess);
    if (slack < -tolerance || excess < -tolerance) {
      report.violations.push_back({s.beta, s.theta, s.x, gamma_f, bound});
    }
  }
  return report;
}

}  // namespace mpa
