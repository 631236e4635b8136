#include "mpa/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "mpa/modes.hpp"
#include "oracles.hpp"

namespace mpa {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(Units, MaxProperAccelerationMatchesOracle) {
  EXPECT_LT(rel(max_proper_acceleration(UnitContext::si()), oracle::kMaxAccelAlpha1), 1e-13);
}

TEST(Units, MaxProperAccelerationLinearInAlpha) {
  const double base = max_proper_acceleration(UnitContext::si(1.0));
  EXPECT_DOUBLE_EQ(max_proper_acceleration(UnitContext::si(2.0)), 2.0 * base);

  const auto& k = PhysicalConstants{};
  const double bare = std::sqrt(std::pow(k.c, 7) / (k.hbar * k.G));
  EXPECT_LT(rel(max_proper_acceleration(UnitContext::si(1.0 / (2.0 * std::numbers::pi))), bare), 1e-15);
}

TEST(Units, MaxProperAccelerationRejectsDimensionless) {
  EXPECT_THROW(max_proper_acceleration(UnitContext::dimensionless(0.1)), std::invalid_argument);
}

TEST(Units, Rho0IsNearPlanckLength) {
  const double r = rho0(UnitContext::si());
  EXPECT_LT(rel(r, oracle::kRho0Alpha1), 1e-13);
  EXPECT_LT(std::abs(std::log10(r / oracle::kPlanckLength)), 1.0);
}

TEST(Units, Rho0TimesMaxAccelerationIsCSquared) {
  for (double alpha : {0.1, 0.5, 1.0, 3.0, 17.0}) {
    const auto ctx = UnitContext::si(alpha);
    const double c = ctx.constants.c;
    EXPECT_LT(rel(rho0(ctx) * max_proper_acceleration(ctx), c * c), 1e-12) << alpha;
  }
}

TEST(Units, Rho0HalvesWhenAlphaDoubles) {
  EXPECT_LT(rel(rho0(UnitContext::si(2.0)), 0.5 * rho0(UnitContext::si(1.0))), 1e-15);
}

TEST(Units, DimensionlessRho0IsPassthrough) {
  EXPECT_EQ(rho0(UnitContext::dimensionless(0.1)), 0.1);
  UnitContext ctx;
  ctx.mode = UnitMode::Dimensionless;
  EXPECT_THROW(rho0(ctx), std::invalid_argument);
}

TEST(Units, PlanckMass) {
  const double m = planck_mass(UnitContext::si());
  EXPECT_LT(rel(m, oracle::kPlanckMass), 1e-13);
  EXPECT_NEAR(m, 2.2e-8, 0.05e-8);

  PhysicalConstants heavy_g;
  heavy_g.G *= 4.0;
  EXPECT_LT(rel(planck_mass(UnitContext::si(1.0, heavy_g)), 0.5 * m), 1e-15);

  PhysicalConstants big_hbar;
  big_hbar.hbar *= 4.0;
  EXPECT_LT(rel(planck_mass(UnitContext::si(1.0, big_hbar)), 2.0 * m), 1e-15);

  EXPECT_THROW(planck_mass(UnitContext::dimensionless(1.0)), std::invalid_argument);
}

TEST(Units, PlanckMassOverride) {
  auto ctx = UnitContext::si();
  ctx.planck_mass_override = 2.2e-8;
  EXPECT_EQ(planck_mass(ctx), 2.2e-8);
}

TEST(Units, RestWavelength) {
  const auto ctx = UnitContext::si();
  const auto& k = ctx.constants;
  const double m_pl = planck_mass(ctx);
  EXPECT_LT(rel(rest_wavelength(ctx, m_pl), std::sqrt(k.hbar * k.G / std::pow(k.c, 3))), 1e-14);
  EXPECT_DOUBLE_EQ(rest_wavelength(ctx, 2.0 * m_pl), 0.5 * rest_wavelength(ctx, m_pl));

  EXPECT_EQ(rest_wavelength(UnitContext::dimensionless(1.0), 1.0), 1.0);
  EXPECT_THROW(rest_wavelength(ctx, 0.0), std::invalid_argument);
  EXPECT_THROW(rest_wavelength(ctx, -1.0), std::invalid_argument);
}

TEST(Units, Rho0OverLambda0MatchesQNorm) {
  ModeSpec spec;
  spec.ctx = UnitContext::si();
  spec.part = {1.7e-27, {1e-20, 0, 0}, 3.0, {1.0, -2.0, 0.5}};
  const double ratio = rho0(spec.ctx) / rest_wavelength(spec.ctx, spec.part.mass);
  const auto& k = spec.ctx.constants;
  EXPECT_LT(rel(ratio, rho0(spec.ctx) * spec.part.mass * k.c / k.hbar), 1e-14);
  const FourVector q = wave_vector_q(spec);
  EXPECT_LT(rel(std::sqrt(minkowski_dot(q, q)), ratio), 1e-12);
}

TEST(Units, DerivedScalesPositive) {
  for (double scale : {1e-3, 1.0, 1e3}) {
    PhysicalConstants k;
    k.c *= scale;
    k.hbar *= scale;
    k.G /= scale;
    const auto ctx = UnitContext::si(scale, k);
    EXPECT_GT(max_proper_acceleration(ctx), 0.0);
    EXPECT_GT(rho0(ctx), 0.0);
    EXPECT_GT(planck_mass(ctx), 0.0);
    EXPECT_GT(rest_wavelength(ctx, 1.0), 0.0);
  }
}

TEST(Units, ValidationRejectsNonPositive) {
  EXPECT_THROW(UnitContext::si(0.0), std::invalid_argument);
  EXPECT_THROW(UnitContext::si(-1.0), std::invalid_argument);
  PhysicalConstants bad;
  bad.hbar = 0.0;
  EXPECT_THROW(UnitContext::si(1.0, bad), std::invalid_argument);
  EXPECT_THROW(UnitContext::dimensionless(0.0), std::invalid_argument);
}

}  // namespace
}  // namespace mpa
