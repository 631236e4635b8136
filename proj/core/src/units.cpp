#include "mpa/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mpa {
namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and > 0");
  }
}

void require_si(const UnitContext& ctx, const char* what) {
  if (!ctx.is_si()) {
    throw std::invalid_argument(std::string(what) + " is only defined in SI mode");
  }
}

}  // namespace

void PhysicalConstants::validate() const {
  require_positive(c, "c");
  require_positive(hbar, "hbar");
  require_positive(G, "G");
  require_positive(avogadro, "avogadro");
  require_positive(nucleon_mass, "nucleon_mass");
}

UnitContext UnitContext::si(double alpha, PhysicalConstants constants) {
  UnitContext ctx;
  ctx.constants = constants;
  ctx.alpha = alpha;
  ctx.mode = UnitMode::SI;
  ctx.validate();
  return ctx;
}

UnitContext UnitContext::dimensionless(double rho0, double alpha) {
  UnitContext ctx;
  ctx.alpha = alpha;
  ctx.mode = UnitMode::Dimensionless;
  ctx.rho0_override = rho0;
  ctx.validate();
  return ctx;
}

void UnitContext::validate() const {
  constants.validate();
  require_positive(alpha, "alpha");
  if (rho0_override) require_positive(*rho0_override, "rho0");
  if (planck_mass_override) require_positive(*planck_mass_override, "planck_mass");
}

double UnitContext::speed_of_light() const {
  return is_si() ? constants.c : 1.0;
}

double UnitContext::reduced_planck() const {
  return is_si() ? constants.hbar : 1.0;
}

double max_proper_acceleration(const UnitContext& ctx) {
  require_si(ctx, "max_proper_acceleration");
  const auto& k = ctx.constants;
  return 2.0 * std::numbers::pi * ctx.alpha * std::sqrt(std::pow(k.c, 7) / (k.hbar * k.G));
}

double rho0(const UnitContext& ctx) {
  if (ctx.is_si()) {
    return ctx.constants.c * ctx.constants.c / max_proper_acceleration(ctx);
  }
  if (!ctx.rho0_override) {
    throw std::invalid_argument("dimensionless mode requires an explicit rho0");
  }
  return *ctx.rho0_override;
}

double planck_mass(const UnitContext& ctx) {
  require_si(ctx, "planck_mass");
  if (ctx.planck_mass_override) return *ctx.planck_mass_override;
  const auto& k = ctx.constants;
  return std::sqrt(k.hbar * k.c / k.G);
}

double rest_wavelength(const UnitContext& ctx, double mass) {
  if (!std::isfinite(mass) || mass <= 0.0) {
    throw std::invalid_argument("rest_wavelength: mass must be > 0");
  }
  return ctx.reduced_planck() / (mass * ctx.speed_of_light());
}

}  // namespace mpa
