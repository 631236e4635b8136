#pragma once

#include <optional>

namespace mpa {

/// Physical constants in SI units. Defaults carry the rounded values used
/// throughout the quantum-to-classical estimate (N_A = 6e23, m_n = 1.7e-27 kg).
struct PhysicalConstants {
  double c = 2.998e8;            // m/s
  double hbar = 1.055e-34;       // J s
  double G = 6.674e-11;          // m^3 / (kg s^2)
  double avogadro = 6e23;        // 1/mol
  double nucleon_mass = 1.7e-27; // kg

  /// Throws std::invalid_argument unless every field is finite and > 0.
  void validate() const;
};

enum class UnitMode { SI, Dimensionless };

/// Constants plus the order-unity factor alpha and the unit system in use.
///
/// In Dimensionless mode c = hbar = 1 and the maximal-acceleration length
/// rho0 is a free parameter supplied by `rho0_override`. SI mode derives it
/// from the constants. `planck_mass_override` lets callers pin m_Pl to a
/// quoted rounded value (e.g. 2.2e-8 kg) instead of (hbar c / G)^{1/2}.
struct UnitContext {
  PhysicalConstants constants{};
  double alpha = 1.0;
  UnitMode mode = UnitMode::SI;
  std::optional<double> rho0_override{};
  std::optional<double> planck_mass_override{};

  static UnitContext si(double alpha = 1.0, PhysicalConstants constants = {});
  static UnitContext dimensionless(double rho0, double alpha = 1.0);

  void validate() const;

  /// c in the active unit system (1 in Dimensionless mode).
  double speed_of_light() const;
  /// hbar in the active unit system (1 in Dimensionless mode).
  double reduced_planck() const;

  bool is_si() const { return mode == UnitMode::SI; }
};

/// a_M = 2 pi alpha (c^7 / hbar G)^{1/2}. SI mode only.
double max_proper_acceleration(const UnitContext& ctx);

/// c^2 / a_M in SI mode, `rho0_override` in Dimensionless mode.
double rho0(const UnitContext& ctx);

/// (hbar c / G)^{1/2}, or the override when set. SI mode only.
double planck_mass(const UnitContext& ctx);

/// Reduced Compton wavelength hbar / (m c); 1/m in Dimensionless mode.
double rest_wavelength(const UnitContext& ctx, double mass);

}  // namespace mpa
