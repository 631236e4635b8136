#include "mpa/modes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mpa {

double reduce_phase(double angle) {
  if (!std::isfinite(angle)) throw std::domain_error("phase must be finite");
  double r = std::remainder(angle, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

LogAmplitude LogAmplitude::zero() {
  return {-std::numeric_limits<double>::infinity(), 0.0, false};
}

LogAmplitude LogAmplitude::from_complex(std::complex<double> z) {
  const double mag = std::abs(z);
  if (mag == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0, true};
  return {std::log(mag), reduce_phase(std::arg(z)), true};
}

LogAmplitude LogAmplitude::polar(double log_mag, double phase, bool support) {
  return {log_mag, reduce_phase(phase), support};
}

bool LogAmplitude::is_zero() const {
  return !support || log_mag == -std::numeric_limits<double>::infinity();
}

double LogAmplitude::magnitude() const {
  return is_zero() ? 0.0 : std::exp(log_mag);
}

std::complex<double> LogAmplitude::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  return std::polar(std::exp(log_mag), phase);
}

LogAmplitude operator*(const LogAmplitude& a, const LogAmplitude& b) {
  return {a.log_mag + b.log_mag, reduce_phase(a.phase + b.phase), a.support && b.support};
}

FourVector unit_acceleration(const ParticleKinematics& part) {
  return (1.0 / part.proper_accel) * four_acceleration(part);
}

double rho0_over_lambda0(const ModeSpec& spec) {
  return rho0(spec.ctx) / rest_wavelength(spec.ctx, spec.part.mass);
}

FourVector wave_vector_k(const ModeSpec& spec) {
  const double c = spec.ctx.speed_of_light();
  return (1.0 / spec.ctx.reduced_planck()) * four_momentum(spec.part, c);
}

FourVector wave_vector_q(const ModeSpec& spec) {
  return rho0_over_lambda0(spec) * unit_acceleration(spec.part);
}

LogAmplitude phi1(const ModeSpec& spec, const FourVector& x) {
  const double c = spec.ctx.speed_of_light();
  const double px = minkowski_dot(four_momentum(spec.part, c), x) / spec.ctx.reduced_planck();
  const double amp = std::abs(spec.amplitude0);
  const double log_amp = amp == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(amp);
  // Reduce the (possibly huge) dimensionless product first, then add arg(phi0).
  const double phase = reduce_phase(branch_sign(spec.branch) * reduce_phase(px) +
                                    std::arg(spec.amplitude0));
  return {log_amp, phase, true};
}

LogAmplitude phi2(const ModeSpec& spec, const FourVector& v) {
  const double sign = branch_sign(spec.branch);
  const double ratio = minkowski_dot(unit_acceleration(spec.part), v);
  return {-sign * rho0_over_lambda0(spec) * ratio, 0.0, heaviside(sign * ratio) > 0.0};
}

LogAmplitude phi_mode(const ModeSpec& spec, const FourVector& x, const FourVector& v) {
  return phi1(spec, x) * phi2(spec, v);
}

double exponent_via_ratio(const ModeSpec& spec, const DeviceState& dev) {
  const FourVector v = four_velocity(dev, spec.ctx.speed_of_light());
  const double ratio = minkowski_dot(unit_acceleration(spec.part), v);
  return -rho0_over_lambda0(spec) * std::abs(ratio);
}

double exponent_via_planck(const ModeSpec& spec, const DeviceState& dev) {
  const auto& ctx = spec.ctx;
  const double c = ctx.speed_of_light();
  const double gamma = lorentz_gamma(dev.velocity3, c);
  const double m_pl =
      ctx.is_si() ? planck_mass(ctx) : 1.0 / (2.0 * std::numbers::pi * ctx.alpha * rho0(ctx));

  if (!(spec.part.proper_accel > 0.0)) throw std::domain_error("proper acceleration must be > 0");
  const Vec3 unit_accel = (1.0 / spec.part.proper_accel) * spec.part.accel3;
  const double bracket =
      std::hypot(1.0, unit_accel.norm()) - unit_accel.dot((1.0 / c) * dev.velocity3);
  return -(1.0 / (2.0 * std::numbers::pi * ctx.alpha)) * (gamma * spec.part.mass / m_pl) * bracket;
}

double suppression_factor(const ModeSpec& spec, const DeviceState& dev) {
  return exponent_via_planck(spec, dev);
}

}  // namespace mpa
