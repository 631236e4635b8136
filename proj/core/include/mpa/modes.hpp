#pragma once

#include <complex>

#include "mpa/kinematics.hpp"
#include "mpa/units.hpp"

namespace mpa {

/// Reduces an angle to (-pi, pi].
double reduce_phase(double angle);

/// Heaviside step with theta(0) = 1.
constexpr double heaviside(double s) { return s >= 0.0 ? 1.0 : 0.0; }

/// A complex value held as (ln|z|, arg z, support). Mode exponents reach
/// 1e3..1e32 in magnitude, far outside double range, so nothing is
/// exponentiated until a caller asks for `to_complex()`.
///
/// `support == false` means the value is exactly zero whatever `log_mag`
/// says; it models the Heaviside factor of the velocity-space mode.
struct LogAmplitude {
  double log_mag = 0.0;
  double phase = 0.0;
  bool support = true;

  static LogAmplitude zero();
  static LogAmplitude from_complex(std::complex<double> z);
  /// Builds from raw parts; the phase is reduced to (-pi, pi].
  static LogAmplitude polar(double log_mag, double phase, bool support = true);

  bool is_zero() const;
  /// |z|, which may underflow to 0 for very negative log_mag.
  double magnitude() const;
  std::complex<double> to_complex() const;

  /// Adds logs and phases, ANDs supports.
  friend LogAmplitude operator*(const LogAmplitude& a, const LogAmplitude& b);
};

enum class Branch { Positive, Negative };

/// Signed branch factor: +1 for Positive, -1 for Negative.
constexpr double branch_sign(Branch b) { return b == Branch::Positive ? 1.0 : -1.0; }

/// One mode of the field: particle kinematics, frequency branch and the
/// overall constant phi0 = phi10 phi20 (carried entirely by the spacetime
/// factor, so phi20 = 1).
struct ModeSpec {
  UnitContext ctx{};
  ParticleKinematics part{};
  Branch branch = Branch::Positive;
  std::complex<double> amplitude0{1.0, 0.0};
};

/// Unit four-vector n = a^mu / a.
FourVector unit_acceleration(const ParticleKinematics& part);

/// rho0 / lambda0 = rho0 m c / hbar.
double rho0_over_lambda0(const ModeSpec& spec);

/// k^mu = p^mu / hbar, with k.k = (mc/hbar)^2.
FourVector wave_vector_k(const ModeSpec& spec);

/// q^mu = (rho0 / lambda0) n^mu, with q.q = (rho0 m c / hbar)^2.
FourVector wave_vector_q(const ModeSpec& spec);

/// phi1(x) = phi0 exp(+-i p.x / hbar).
LogAmplitude phi1(const ModeSpec& spec, const FourVector& x);

/// phi2(v) = exp(-+ (rho0/lambda0)(a.v/a)) theta(+-(a.v/a)). `v` is a free
/// point of four-velocity space.
LogAmplitude phi2(const ModeSpec& spec, const FourVector& v);

/// phi(x, v) = phi1(x) phi2(v).
LogAmplitude phi_mode(const ModeSpec& spec, const FourVector& x, const FourVector& v);

/// ln of the suppression factor, -(rho0/lambda0) |a.v/a|, with v the
/// device four-velocity.
double exponent_via_ratio(const ModeSpec& spec, const DeviceState& dev);

/// ln of the suppression factor written through the Planck mass:
/// -(1/(2 pi alpha)) (gamma m / m_Pl) [ (1 + (|a|/a)^2)^{1/2} - (a/a).(u/c) ].
/// In Dimensionless mode m_Pl is the equivalent 1 / (2 pi alpha rho0).
double exponent_via_planck(const ModeSpec& spec, const DeviceState& dev);

/// Natural log of the factor multiplying both frequency branches.
double suppression_factor(const ModeSpec& spec, const DeviceState& dev);

}  // namespace mpa
