#include "mpa/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace mpa {

double Vec3::norm() const { return std::sqrt(dot(*this)); }

double FourVector::operator[](int mu) const {
  switch (mu) {
    case 0: return t;
    case 1: return x;
    case 2: return y;
    case 3: return z;
  }
  throw std::out_of_range("FourVector index must be in [0, 3]");
}

double& FourVector::operator[](int mu) {
  switch (mu) {
    case 0: return t;
    case 1: return x;
    case 2: return y;
    case 3: return z;
  }
  throw std::out_of_range("FourVector index must be in [0, 3]");
}

double minkowski_dot(const FourVector& u, const FourVector& w) {
  return u.t * w.t - u.x * w.x - u.y * w.y - u.z * w.z;
}

FourVector basis(int mu) {
  FourVector e;
  e[mu] = 1.0;
  return e;
}

double lorentz_gamma(const Vec3& velocity3, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("speed of light must be > 0");
  const double beta = velocity3.norm() / c;
  if (!std::isfinite(beta) || beta >= 1.0 - kLuminalMargin) {
    throw std::domain_error("device speed must be strictly below c");
  }
  return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

FourVector four_velocity(const DeviceState& dev, double c) {
  const double gamma = lorentz_gamma(dev.velocity3, c);
  return FourVector::from(gamma, (gamma / c) * dev.velocity3);
}

FourVector four_acceleration(const ParticleKinematics& part) {
  if (!(part.proper_accel > 0.0) || !std::isfinite(part.proper_accel)) {
    throw std::domain_error("proper acceleration must be > 0");
  }
  const double a = part.proper_accel;
  return FourVector::from(std::hypot(a, part.accel3.norm()), part.accel3);
}

FourVector four_momentum(const ParticleKinematics& part, double c) {
  if (!(part.mass > 0.0)) throw std::domain_error("mass must be > 0");
  return FourVector::from(std::hypot(part.mass * c, part.momentum3.norm()), part.momentum3);
}

double accel_velocity_ratio(const ParticleKinematics& part, const DeviceState& dev, double c) {
  const double gamma = lorentz_gamma(dev.velocity3, c);
  if (!(part.proper_accel > 0.0)) throw std::domain_error("proper acceleration must be > 0");
  const double a = part.proper_accel;
  const Vec3 unit_accel = (1.0 / a) * part.accel3;
  const Vec3 beta = (1.0 / c) * dev.velocity3;
  return gamma * (std::hypot(1.0, unit_accel.norm()) - unit_accel.dot(beta));
}

double line_element_8d(const FourVector& dx, const FourVector& dv, double rho0) {
  return minkowski_dot(dx, dx) + rho0 * rho0 * minkowski_dot(dv, dv);
}

}  // namespace mpa
