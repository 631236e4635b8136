#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mpa/extremum.hpp"
#include "mpa/pde.hpp"
#include "mpa/transition.hpp"

namespace mpa {

// CSV headers are part of the file contract and must not change.
inline constexpr const char* kTransitionCsvHeader = "n_nucleons,mass_kg,ln_magnitude,log10_magnitude";
inline constexpr const char* kViolationCsvHeader = "beta,theta,x,gammaF,bound";
inline constexpr const char* kResidualCsvHeader = "t,x,y,z,v0,v1,v2,v3,abs_residual,rel_residual,h";

void write_transition_csv(std::ostream& out, const TransitionCurve& curve);
void write_violation_csv(std::ostream& out, const std::vector<BoundViolation>& violations);
void write_residual_csv(std::ostream& out, const std::vector<ResidualReport>& reports);

/// Static SVG plot: log10(n) against log10|psi| with a dashed horizontal
/// line at `cutoff_log10`.
std::string render_transition_svg(const TransitionCurve& curve, double cutoff_log10);

}  // namespace mpa
