#include "mpa/transition.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace mpa {
namespace {

UnitContext rounded_planck() {
  UnitContext ctx = UnitContext::si();
  ctx.planck_mass_override = 2.2e-8;
  return ctx;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(RestState, NucleonAndElectron) {
  EXPECT_LT(rel(rest_state_ln_magnitude(1.7e-27, 0.0, 1.0, rounded_planck()),
                oracle::kNucleonExponentRounded),
            1e-13);
  EXPECT_LT(rel(rest_state_ln_magnitude(1.7e-27, 0.0, 1.0, UnitContext::si()),
                oracle::kNucleonExponentComputed),
            1e-13);
  EXPECT_LT(rel(rest_state_ln_magnitude(9.11e-31, 0.0, 1.0, UnitContext::si()),
                oracle::kElectronExponentComputed),
            1e-13);
}

TEST(RestState, AccelerationRatioAndAlpha) {
  const auto ctx = UnitContext::si();
  const double base = rest_state_ln_magnitude(1e-20, 0.0, 1.0, ctx);
  EXPECT_LT(rel(rest_state_ln_magnitude(1e-20, 0.75, 1.0, ctx), 1.25 * base), 1e-15);
  EXPECT_LT(rel(rest_state_ln_magnitude(1e-20, 0.0, 2.0, ctx), 0.5 * base), 1e-15);
  EXPECT_THROW(rest_state_ln_magnitude(0.0, 0.0, 1.0, ctx), std::invalid_argument);
  EXPECT_THROW(rest_state_ln_magnitude(1.0, 0.0, 0.0, ctx), std::invalid_argument);
}

TEST(MacroState, AvogadroNucleons) {
  const ObjectModel mole{6e23};
  const double ln_psi = macro_state_ln_bound(mole, rounded_planck());
  EXPECT_LT(rel(ln_psi, oracle::kAvogadroLn), 1e-12);
  EXPECT_LT(rel(ln_psi / std::numbers::ln10, oracle::kAvogadroLog10), 1e-12);
  EXPECT_LT(ln_psi / std::numbers::ln10, -1000.0);
}

TEST(MacroState, AdditiveInNucleonCount) {
  const auto ctx = UnitContext::si();
  const double one = macro_state_ln_bound({1.0}, ctx);
  for (double n : {2.0, 1e3, 1e10, 1e26}) {
    EXPECT_LT(rel(macro_state_ln_bound({n}, ctx), n * one), 1e-15) << n;
  }
  EXPECT_THROW(macro_state_ln_bound({0.5}, ctx), std::invalid_argument);
  EXPECT_THROW(macro_state_ln_bound({1.0, 1.7e-27, -1.0}, ctx), std::invalid_argument);
}

TEST(TransitionCurve, LogSpacingHitsEndpoints) {
  const auto curve = transition_curve(1.0, 1e26, 101, Spacing::Log, {}, UnitContext::si());
  ASSERT_EQ(curve.samples.size(), 101u);
  EXPECT_EQ(curve.samples.front().n_nucleons, 1.0);
  EXPECT_EQ(curve.samples.back().n_nucleons, 1e26);
  EXPECT_LT(rel(curve.samples[50].n_nucleons, 1e13), 1e-12);
  for (std::size_t i = 1; i < curve.samples.size(); ++i) {
    EXPECT_GT(curve.samples[i].n_nucleons, curve.samples[i - 1].n_nucleons);
    EXPECT_LT(curve.samples[i].ln_magnitude, curve.samples[i - 1].ln_magnitude);
  }
  for (const auto& s : curve.samples) {
    EXPECT_EQ(s.mass_kg, s.n_nucleons * 1.7e-27);
    EXPECT_NEAR(s.log10_magnitude * std::numbers::ln10, s.ln_magnitude, 1e-12 * std::abs(s.ln_magnitude));
  }
}

TEST(TransitionCurve, LinearSpacing) {
  const auto curve = transition_curve(1.0, 11.0, 11, Spacing::Linear, {}, UnitContext::si());
  for (std::size_t i = 0; i < 11; ++i) EXPECT_NEAR(curve.samples[i].n_nucleons, 1.0 + i, 1e-12);
}

TEST(TransitionCurve, Validation) {
  const auto ctx = UnitContext::si();
  EXPECT_THROW(transition_curve(0.5, 10.0, 5, Spacing::Log, {}, ctx), std::invalid_argument);
  EXPECT_THROW(transition_curve(10.0, 10.0, 5, Spacing::Log, {}, ctx), std::invalid_argument);
  EXPECT_THROW(transition_curve(1.0, 10.0, 1, Spacing::Log, {}, ctx), std::invalid_argument);
}

TEST(Threshold, LnMinusOne) {
  EXPECT_LT(rel(classicality_threshold({}, rounded_planck(), -1.0), oracle::kThresholdLnMinusOne), 1e-13);
  const double n = classicality_threshold({}, rounded_planck(), default_ln_cutoff());
  EXPECT_NEAR(macro_state_ln_bound({n}, rounded_planck()), -3.0 * std::numbers::ln10, 1e-9);
  EXPECT_THROW(classicality_threshold({}, rounded_planck(), 0.5), std::invalid_argument);
}

}  // namespace
}  // namespace mpa
