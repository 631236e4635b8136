#include "mpa/transition.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mpa {

void ObjectModel::validate() const {
  if (!(n_nucleons >= 1.0) || !std::isfinite(n_nucleons)) {
    throw std::invalid_argument("n_nucleons must be >= 1");
  }
  if (!(nucleon_mass > 0.0)) throw std::invalid_argument("nucleon_mass must be > 0");
  if (!(accel_ratio >= 0.0) || !std::isfinite(accel_ratio)) {
    throw std::invalid_argument("accel_ratio must be >= 0");
  }
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
}

double rest_state_ln_magnitude(double mass, double accel_ratio, double alpha, const UnitContext& ctx) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be > 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  return -(mass / planck_mass(ctx)) * std::hypot(1.0, accel_ratio) / (2.0 * std::numbers::pi * alpha);
}

double macro_state_ln_bound(const ObjectModel& obj, const UnitContext& ctx) {
  obj.validate();
  return obj.n_nucleons * rest_state_ln_magnitude(obj.nucleon_mass, obj.accel_ratio, obj.alpha, ctx);
}

TransitionCurve transition_curve(double n_min, double n_max, std::size_t points, Spacing spacing,
                                 const ObjectModel& tmpl, const UnitContext& ctx) {
  if (!(n_min >= 1.0) || !(n_max > n_min) || !std::isfinite(n_max)) {
    throw std::invalid_argument("need 1 <= n_min < n_max");
  }
  if (points < 2) throw std::invalid_argument("need at least 2 points");

  const double per_nucleon =
      rest_state_ln_magnitude(tmpl.nucleon_mass, tmpl.accel_ratio, tmpl.alpha, ctx);
  TransitionCurve curve;
  curve.alpha = tmpl.alpha;
  curve.accel_ratio = tmpl.accel_ratio;
  curve.samples.reserve(points);

  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / last;
    double n;
    if (i == 0) {
      n = n_min;
    } else if (i + 1 == points) {
      n = n_max;
    } else if (spacing == Spacing::Log) {
      n = std::exp(std::log(n_min) + t * (std::log(n_max) - std::log(n_min)));
    } else {
      n = n_min + t * (n_max - n_min);
    }
    const double ln_mag = n * per_nucleon;
    curve.samples.push_back({n, n * tmpl.nucleon_mass, ln_mag, ln_mag / std::numbers::ln10});
  }
  return curve;
}

double classicality_threshold(const ObjectModel& tmpl, const UnitContext& ctx, double ln_cutoff) {
  if (!(ln_cutoff < 0.0)) throw std::invalid_argument("ln_cutoff must be < 0");
  const double per_nucleon =
      rest_state_ln_magnitude(tmpl.nucleon_mass, tmpl.accel_ratio, tmpl.alpha, ctx);
  if (per_nucleon == 0.0) throw std::domain_error("per-nucleon exponent vanishes");
  return ln_cutoff / per_nucleon;
}

double default_ln_cutoff() { return -3.0 * std::numbers::ln10; }

}  // namespace mpa
