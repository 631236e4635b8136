#pragma once

#include <cstddef>
#include <vector>

#include "mpa/units.hpp"

namespace mpa {

/// N uncorrelated nucleons at rest relative to the measuring device.
struct ObjectModel {
  double n_nucleons = 1.0;
  double nucleon_mass = 1.7e-27;
  double accel_ratio = 0.0;  // |a|/a
  double alpha = 1.0;

  double mass() const { return n_nucleons * nucleon_mass; }
  void validate() const;
};

struct TransitionSample {
  double n_nucleons;
  double mass_kg;
  double ln_magnitude;
  double log10_magnitude;
};

/// Upper bound on the many-body state magnitude across a range of sizes.
/// Only logarithms are stored: e^-7379 is not representable.
struct TransitionCurve {
  std::vector<TransitionSample> samples;
  double alpha = 1.0;
  double accel_ratio = 0.0;
};

enum class Spacing { Log, Linear };

/// ln|psi| for one particle at rest relative to the device, A = 1:
/// -(1/(2 pi alpha)) (m / m_Pl) (1 + accel_ratio^2)^{1/2}.
double rest_state_ln_magnitude(double mass, double accel_ratio, double alpha, const UnitContext& ctx);

/// ln of the macroscopic bound with A' = 1: n_nucleons times the
/// single-nucleon exponent, since the exponents add.
double macro_state_ln_bound(const ObjectModel& obj, const UnitContext& ctx);

/// Samples the bound for n in [n_min, n_max]; endpoints are hit exactly.
/// `tmpl` supplies nucleon mass, accel_ratio and alpha.
TransitionCurve transition_curve(double n_min, double n_max, std::size_t points, Spacing spacing,
                                 const ObjectModel& tmpl, const UnitContext& ctx);

/// Nucleon count at which the bound reaches `ln_cutoff` (< 0).
double classicality_threshold(const ObjectModel& tmpl, const UnitContext& ctx, double ln_cutoff);

/// Default cutoff: |psi| < 1e-3.
double default_ln_cutoff();

}  // namespace mpa
