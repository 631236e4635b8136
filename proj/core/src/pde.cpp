#include "mpa/pde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mpa/random.hpp"

namespace mpa {
namespace {

enum class Axis { Space, Velocity };

std::complex<double> wave_operator(const FieldSampler& f, const FourVector& x, const FourVector& v,
                                   const StencilConfig& cfg, Axis axis) {
  cfg.validate();
  const LogAmplitude centre = f(x, v);
  const std::complex<double> fc = centre.to_complex();
  const double inv_h2 = 1.0 / (cfg.h * cfg.h);

  std::complex<double> acc{0.0, 0.0};
  for (int mu = 0; mu < 4; ++mu) {
    const FourVector step = cfg.h * basis(mu);
    const LogAmplitude plus = axis == Axis::Space ? f(x + step, v) : f(x, v + step);
    const LogAmplitude minus = axis == Axis::Space ? f(x - step, v) : f(x, v - step);
    if (plus.support != centre.support || minus.support != centre.support) {
      throw StencilError("stencil crosses the support boundary of the field");
    }
    acc += metric_sign(mu) * (plus.to_complex() - 2.0 * fc + minus.to_complex()) * inv_h2;
  }
  return acc;
}

void require_pde_units(const ModeSpec& spec) {
  if (spec.ctx.is_si()) {
    throw std::invalid_argument("PDE verification runs in dimensionless units only");
  }
  const double r = rho0(spec.ctx);
  if (r < 0.01 || r > 10.0) throw std::invalid_argument("rho0 must lie in [0.01, 10]");
}

void require_margin(const ModeSpec& spec, const FourVector& v, double h, double margin) {
  const FourVector n = unit_acceleration(spec.part);
  auto check = [&](const FourVector& point) {
    if (std::abs(minkowski_dot(n, point)) < margin) {
      throw StencilError("velocity stencil comes within the support margin of a.v = 0");
    }
  };
  check(v);
  for (int mu = 0; mu < 4; ++mu) {
    check(v + h * basis(mu));
    check(v - h * basis(mu));
  }
}

bool margin_ok(const ModeSpec& spec, const FourVector& v, double h, double margin) {
  try {
    require_margin(spec, v, h, margin);
    return true;
  } catch (const StencilError&) {
    return false;
  }
}

}  // namespace

void StencilConfig::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("stencil step must be > 0");
  if (!(support_margin >= 0.1)) throw std::invalid_argument("support margin must be >= 0.1");
}

std::complex<double> dalembertian_x(const FieldSampler& f, const FourVector& x,
                                    const FourVector& v, const StencilConfig& cfg) {
  return wave_operator(f, x, v, cfg, Axis::Space);
}

std::complex<double> dalembertian_v(const FieldSampler& f, const FourVector& x,
                                    const FourVector& v, const StencilConfig& cfg) {
  return wave_operator(f, x, v, cfg, Axis::Velocity);
}

ResidualReport residual_8d(const ModeSpec& spec, const FourVector& x, const FourVector& v,
                           const StencilConfig& cfg) {
  require_pde_units(spec);
  cfg.validate();

  ResidualReport report;
  report.point = {x.t, x.x, x.y, x.z, v.t, v.x, v.y, v.z};
  report.h = cfg.h;

  const LogAmplitude centre = phi_mode(spec, x, v);
  if (centre.is_zero()) {
    report.skipped = true;
    return report;
  }
  require_margin(spec, v, cfg.h, cfg.support_margin);

  const FieldSampler field = [&spec](const FourVector& xs, const FourVector& vs) {
    return phi_mode(spec, xs, vs);
  };
  const double r0 = rho0(spec.ctx);
  report.residual =
      dalembertian_x(field, x, v, cfg) + dalembertian_v(field, x, v, cfg) / (r0 * r0);

  // (mc/hbar)^2 = lambda0^-2
  const double inv_lambda0 = 1.0 / rest_wavelength(spec.ctx, spec.part.mass);
  report.relative_residual =
      std::abs(report.residual) / (inv_lambda0 * inv_lambda0 * centre.magnitude());
  return report;
}

SeparationConstants separation_check(const ModeSpec& spec, const FourVector& x,
                                     const FourVector& v, const StencilConfig& cfg) {
  require_pde_units(spec);
  const LogAmplitude p1 = phi1(spec, x);
  const LogAmplitude p2 = phi2(spec, v);
  if (p1.is_zero() || p2.is_zero()) {
    throw std::domain_error("separation check needs non-vanishing phi1 and phi2");
  }
  require_margin(spec, v, cfg.h, cfg.support_margin);

  const FieldSampler space = [&spec](const FourVector& xs, const FourVector&) {
    return phi1(spec, xs);
  };
  const FieldSampler velocity = [&spec](const FourVector&, const FourVector& vs) {
    return phi2(spec, vs);
  };
  const double r0 = rho0(spec.ctx);
  return {dalembertian_x(space, x, v, cfg) / p1.to_complex(),
          dalembertian_v(velocity, x, v, cfg) / p2.to_complex() / (r0 * r0)};
}

ConvergenceEstimate fit_convergence_order(std::span<const double> h,
                                          std::span<const double> residuals,
                                          double noise_scale) {
  if (h.size() < 3 || h.size() != residuals.size()) {
    throw std::invalid_argument("convergence fit needs >= 3 (h, residual) pairs");
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(h[i] > 0.0) || (i > 0 && !(h[i] < h[i - 1]))) {
      throw std::invalid_argument("step sizes must be positive and strictly decreasing");
    }
  }

  ConvergenceEstimate est;
  est.h.assign(h.begin(), h.end());
  est.residuals.assign(residuals.begin(), residuals.end());

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double floor = noise_scale * 100.0 * eps / (h[i] * h[i]);
    if (!(residuals[i] > floor)) est.at_noise_floor = true;
  }
  if (est.at_noise_floor) {
    est.slope = std::numeric_limits<double>::quiet_NaN();
    return est;
  }

  const auto n = static_cast<double>(h.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double lx = std::log(h[i]);
    const double ly = std::log(residuals[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return est;
}

ConvergenceEstimate convergence_order(const std::function<double(double)>& residual_at,
                                      std::span<const double> h_sequence, double noise_scale) {
  std::vector<double> residuals;
  residuals.reserve(h_sequence.size());
  for (double h : h_sequence) residuals.push_back(residual_at(h));
  return fit_convergence_order(h_sequence, residuals, noise_scale);
}

ConvergenceEstimate convergence_order(const ModeSpec& spec, const FourVector& x,
                                      const FourVector& v, std::span<const double> h_sequence,
                                      double support_margin) {
  return convergence_order(
      [&](double h) {
        const ResidualReport r = residual_8d(spec, x, v, {h, Scheme::Central2, support_margin});
        if (r.skipped) throw std::domain_error("mode vanishes at the convergence point");
        return r.relative_residual;
      },
      h_sequence);
}

void PdeSweepConfig::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be > 0");
  if (!(rho0 >= 0.01 && rho0 <= 10.0)) throw std::invalid_argument("rho0 must lie in [0.01, 10]");
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("h must be > 0");
  if (points == 0) throw std::invalid_argument("points must be >= 1");
  if (!(margin >= 0.1)) throw std::invalid_argument("margin must be >= 0.1");
  if (h_sequence.size() < 3) throw std::invalid_argument("h_sequence needs >= 3 steps");
}

std::vector<PdeSample> sample_interior_points(const PdeSweepConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const double widest = std::max(cfg.h, *std::max_element(cfg.h_sequence.begin(), cfg.h_sequence.end()));

  std::vector<PdeSample> samples;
  samples.reserve(cfg.points);
  while (samples.size() < cfg.points) {
    PdeSample s;
    s.spec.ctx = UnitContext::dimensionless(cfg.rho0);
    s.spec.branch = (rng.next() & 1u) ? Branch::Negative : Branch::Positive;
    s.spec.part.mass = cfg.mass;
    s.spec.part.momentum3 = {rng.uniform(-0.5, 0.5) * cfg.mass, rng.uniform(-0.5, 0.5) * cfg.mass,
                             rng.uniform(-0.5, 0.5) * cfg.mass};
    s.spec.part.proper_accel = rng.uniform(0.5, 2.0);
    s.spec.part.accel3 = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

    s.x = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
           rng.uniform(-2.0, 2.0)};

    // Device velocity: random direction, speed below 0.7 c.
    const double speed = rng.uniform(0.0, 0.7);
    const double cos_polar = rng.uniform(-1.0, 1.0);
    const double azimuth = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double sin_polar = std::sqrt(1.0 - cos_polar * cos_polar);
    DeviceState dev;
    dev.velocity3 = {speed * sin_polar * std::cos(azimuth), speed * sin_polar * std::sin(azimuth),
                     speed * cos_polar};
    FourVector v = four_velocity(dev, 1.0);
    v = v + FourVector{rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05),
                       rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05)};
    if (s.spec.branch == Branch::Negative) v = -1.0 * v;
    s.v = v;

    if (margin_ok(s.spec, s.v, widest, cfg.margin)) samples.push_back(s);
  }
  return samples;
}

PdeSweepResult pde_sweep(const PdeSweepConfig& cfg) {
  PdeSweepResult result;
  const std::vector<PdeSample> samples = sample_interior_points(cfg);
  std::vector<double> mean_residual(cfg.h_sequence.size(), 0.0);

  result.min_point_slope = std::numeric_limits<double>::infinity();
  result.max_point_slope = -std::numeric_limits<double>::infinity();
  for (const PdeSample& s : samples) {
    PdeSweepPoint point{s, residual_8d(s.spec, s.x, s.v, {cfg.h, Scheme::Central2, cfg.margin}),
                        convergence_order(s.spec, s.x, s.v, cfg.h_sequence, cfg.margin)};
    result.max_rel_residual = std::max(result.max_rel_residual, point.report.relative_residual);
    for (std::size_t i = 0; i < mean_residual.size(); ++i) {
      mean_residual[i] += point.convergence.residuals[i] / static_cast<double>(samples.size());
    }
    result.min_point_slope = std::min(result.min_point_slope, point.convergence.slope);
    result.max_point_slope = std::max(result.max_point_slope, point.convergence.slope);
    result.points.push_back(std::move(point));
  }
  result.convergence_slope = fit_convergence_order(cfg.h_sequence, mean_residual).slope;
  return result;
}

}  // namespace mpa
