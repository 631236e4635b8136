#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mpa/kinematics.hpp"
#include "mpa/modes.hpp"

namespace mpa {

enum class Scheme { Central2 };

struct StencilConfig {
  double h = 1e-3;
  Scheme scheme = Scheme::Central2;
  /// Minimum |a.v/a| at every v-stencil point; keeps stencils off the
  /// Heaviside jump so only the smooth branch is differentiated.
  double support_margin = 0.1;

  void validate() const;
};

/// Raised when a stencil straddles the support boundary of a field.
class StencilError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Field evaluated at a point (x, v) of the eight-dimensional bundle.
using FieldSampler = std::function<LogAmplitude(const FourVector& x, const FourVector& v)>;

/// Central-difference d^2/dt^2 - grad^2 in x at fixed v (9 samples).
std::complex<double> dalembertian_x(const FieldSampler& f, const FourVector& x,
                                    const FourVector& v, const StencilConfig& cfg);

/// Same operator in the four velocity coordinates at fixed x.
std::complex<double> dalembertian_v(const FieldSampler& f, const FourVector& x,
                                    const FourVector& v, const StencilConfig& cfg);

struct ResidualReport {
  std::array<double, 8> point{};
  std::complex<double> residual{};
  double relative_residual = 0.0;
  double h = 0.0;
  /// Set when the mode vanishes at the centre (wrong-branch support).
  bool skipped = false;
};

/// (box_x + rho0^-2 box_v) phi at (x, v), relative to |(mc/hbar)^2 phi|.
/// Dimensionless units only, with rho0 in [0.01, 10].
ResidualReport residual_8d(const ModeSpec& spec, const FourVector& x, const FourVector& v,
                           const StencilConfig& cfg);

struct SeparationConstants {
  std::complex<double> lhs_x;  // box_x phi1 / phi1, expected -(mc/hbar)^2
  std::complex<double> lhs_v;  // rho0^-2 box_v phi2 / phi2, expected +(mc/hbar)^2
};

SeparationConstants separation_check(const ModeSpec& spec, const FourVector& x,
                                     const FourVector& v, const StencilConfig& cfg);

struct ConvergenceEstimate {
  std::vector<double> h;
  std::vector<double> residuals;
  /// Least-squares slope of log(residual) against log(h); NaN when flagged.
  double slope = 0.0;
  /// Some residual sits at round-off level, so the slope carries no signal.
  bool at_noise_floor = false;
};

/// Fits the observed order. Needs >= 3 strictly decreasing steps. A
/// residual is treated as noise when it falls below
/// noise_scale * 100 eps / h^2, the round-off level of a second difference.
ConvergenceEstimate fit_convergence_order(std::span<const double> h,
                                          std::span<const double> residuals,
                                          double noise_scale = 1.0);

ConvergenceEstimate convergence_order(const std::function<double(double)>& residual_at,
                                      std::span<const double> h_sequence,
                                      double noise_scale = 1.0);

/// Relative residual of residual_8d over the step sequence.
ConvergenceEstimate convergence_order(const ModeSpec& spec, const FourVector& x,
                                      const FourVector& v, std::span<const double> h_sequence,
                                      double support_margin = 0.1);

/// Seeded sweep of residual_8d over random interior points.
struct PdeSweepConfig {
  double mass = 1.0;
  double rho0 = 1.0;
  double h = 1e-3;
  std::size_t points = 100;
  std::uint64_t seed = 1;
  double margin = 0.1;
  std::vector<double> h_sequence{1e-2, 5e-3, 2.5e-3};

  void validate() const;
};

struct PdeSample {
  ModeSpec spec;
  FourVector x;
  FourVector v;
};

struct PdeSweepPoint {
  PdeSample sample;
  ResidualReport report;
  ConvergenceEstimate convergence;
};

struct PdeSweepResult {
  std::vector<PdeSweepPoint> points;
  double max_rel_residual = 0.0;
  /// Order fitted to the mean relative residual across points.
  double convergence_slope = 0.0;
  double min_point_slope = 0.0;
  double max_point_slope = 0.0;
};

/// Draws kinematics, branch and (x, v) per point. v is a physical
/// four-velocity (sign-flipped for the negative branch) plus a small box
/// perturbation, redrawn until the widest stencil respects the margin.
std::vector<PdeSample> sample_interior_points(const PdeSweepConfig& cfg);

PdeSweepResult pde_sweep(const PdeSweepConfig& cfg);

}  // namespace mpa
