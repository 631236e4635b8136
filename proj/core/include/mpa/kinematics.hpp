#pragma once

namespace mpa {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;

  friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

/// (time, space) tuple contracted with signature (+,-,-,-). Carries x, v, p,
/// a, k, q and n alike; the time component is index 0.
struct FourVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 spatial() const { return {x, y, z}; }
  double operator[](int mu) const;
  double& operator[](int mu);

  static FourVector from(double t, const Vec3& s) { return {t, s.x, s.y, s.z}; }

  friend FourVector operator+(const FourVector& a, const FourVector& b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend FourVector operator*(double s, const FourVector& a) {
    return {s * a.t, s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const FourVector&, const FourVector&) = default;
};

/// Metric diagonal: +1 for mu = 0, -1 otherwise.
constexpr double metric_sign(int mu) { return mu == 0 ? 1.0 : -1.0; }

double minkowski_dot(const FourVector& u, const FourVector& w);

/// Unit basis vector e_mu.
FourVector basis(int mu);

/// Measuring device: its spacetime position (t-component = ct) and its
/// 3-velocity dx/dt relative to the particle.
struct DeviceState {
  FourVector position{};
  Vec3 velocity3{};
};

/// Particle parameters. The four-acceleration is given by its proper
/// magnitude and spatial part; a^0 is derived so that a.a = proper_accel^2.
struct ParticleKinematics {
  double mass = 1.0;
  Vec3 momentum3{};
  double proper_accel = 1.0;
  Vec3 accel3{};
};

/// Speeds with |u|/c >= 1 - kLuminalMargin are rejected.
inline constexpr double kLuminalMargin = 1e-12;

/// gamma = (1 - |u|^2/c^2)^{-1/2}; throws std::domain_error for |u|/c too
/// close to or above 1.
double lorentz_gamma(const Vec3& velocity3, double c);

/// (gamma, gamma u / c): dimensionless four-velocity of the device.
FourVector four_velocity(const DeviceState& dev, double c);

/// ((a^2 + |a|^2)^{1/2}, a). Throws std::domain_error for proper_accel <= 0.
FourVector four_acceleration(const ParticleKinematics& part);

/// ((m^2 c^2 + |p|^2)^{1/2}, p).
FourVector four_momentum(const ParticleKinematics& part, double c);

/// (a.v)/a = gamma [ (1 + (|a|/a)^2)^{1/2} - (a/a).(u/c) ], always >= 1.
double accel_velocity_ratio(const ParticleKinematics& part, const DeviceState& dev, double c);

/// d sigma^2 = dx.dx + rho0^2 dv.dv on the spacetime/four-velocity bundle.
double line_element_8d(const FourVector& dx, const FourVector& dv, double rho0);

}  // namespace mpa
