#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "mpa/extremum.hpp"
#include "mpa/fock.hpp"
#include "mpa/kinematics.hpp"
#include "mpa/modes.hpp"
#include "mpa/pde.hpp"
#include "mpa/random.hpp"
#include "mpa/report.hpp"
#include "mpa/transition.hpp"
#include "mpa/units.hpp"

namespace mpa::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Bad user input detected before any output is produced.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const FourVector& v) { return Json::array({v.t, v.x, v.y, v.z}); }

Vec3 to_vec3(const std::vector<double>& v) { return {v.at(0), v.at(1), v.at(2)}; }

/// Files are written only after every computation succeeded.
struct PendingFile {
  std::string path;
  std::string content;
};

void flush(const std::vector<PendingFile>& files) {
  for (const auto& f : files) {
    std::ofstream os(f.path, std::ios::binary);
    if (!os) throw UsageError("cannot open output file: " + f.path);
    os << f.content;
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

// ---------------------------------------------------------------------------

struct KinematicsFlags {
  double mass = 0.0;
  std::vector<double> p{0.0, 0.0, 0.0};
  double aproper = 1.0;
  std::vector<double> a{0.0, 0.0, 0.0};
  std::vector<double> u{0.0, 0.0, 0.0};

  void attach(CLI::App* sub, bool mass_required) {
    auto* m = sub->add_option("--mass", mass, "Particle rest mass (kg, or dimensionless)");
    if (mass_required) m->required();
    sub->add_option("--p", p, "Spatial momentum px,py,pz")->expected(3)->delimiter(',');
    sub->add_option("--aproper", aproper, "Proper acceleration magnitude a > 0");
    sub->add_option("--a", a, "Spatial acceleration ax,ay,az")->expected(3)->delimiter(',');
    sub->add_option("--u", u, "Device velocity relative to the particle ux,uy,uz")
        ->expected(3)
        ->delimiter(',');
  }

  ParticleKinematics particle() const {
    require(std::isfinite(mass) && mass > 0.0, "--mass must be > 0");
    require(std::isfinite(aproper) && aproper > 0.0, "--aproper must be > 0");
    for (double c : p) require(std::isfinite(c), "--p components must be finite");
    for (double c : a) require(std::isfinite(c), "--a components must be finite");
    return {mass, to_vec3(p), aproper, to_vec3(a)};
  }

  DeviceState device(double c) const {
    for (double comp : u) require(std::isfinite(comp), "--u components must be finite");
    DeviceState dev;
    dev.velocity3 = to_vec3(u);
    require(dev.velocity3.norm() / c < 1.0 - kLuminalMargin, "--u must be slower than light");
    return dev;
  }
};

int cmd_constants(double alpha, std::ostream& out) {
  require(std::isfinite(alpha) && alpha > 0.0, "--alpha must be > 0");
  const UnitContext ctx = UnitContext::si(alpha);
  Json j;
  j["c"] = ctx.constants.c;
  j["hbar"] = ctx.constants.hbar;
  j["G"] = ctx.constants.G;
  j["avogadro"] = ctx.constants.avogadro;
  j["nucleon_mass"] = ctx.constants.nucleon_mass;
  j["alpha"] = ctx.alpha;
  j["a_max"] = max_proper_acceleration(ctx);
  j["rho0"] = rho0(ctx);
  j["planck_mass"] = planck_mass(ctx);
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_kinematics(const KinematicsFlags& flags, std::ostream& out) {
  const UnitContext ctx = UnitContext::si();
  const double c = ctx.constants.c;
  const ParticleKinematics part = flags.particle();
  const DeviceState dev = flags.device(c);

  Json j;
  j["gamma"] = lorentz_gamma(dev.velocity3, c);
  j["four_velocity"] = to_json(four_velocity(dev, c));
  j["four_acceleration"] = to_json(four_acceleration(part));
  j["four_momentum"] = to_json(four_momentum(part, c));
  j["accel_velocity_ratio"] = accel_velocity_ratio(part, dev, c);
  out << j.dump(2) << '\n';
  return kOk;
}

struct ScanFlags {
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
  std::string csv;
};

int cmd_inequality_scan(const ScanFlags& flags, std::ostream& out) {
  require(flags.samples > 0, "--samples must be >= 1");
  require(std::isfinite(flags.tolerance) && flags.tolerance >= 0.0, "--tolerance must be >= 0");

  const InequalityScanReport report = inequality_scan(flags.samples, flags.seed, flags.tolerance);
  std::vector<PendingFile> files;
  if (!flags.csv.empty()) {
    std::ostringstream csv;
    write_violation_csv(csv, report.violations);
    files.push_back({flags.csv, csv.str()});
  }
  flush(files);

  Json j;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["rng"] = Rng::kName;
  j["tolerance"] = report.tolerance;
  j["violations"] = report.violations.size();
  j["min_slack"] = report.min_slack;
  j["min_bound_excess"] = report.min_bound_excess;
  j["passed"] = report.passed();
  out << j.dump(2) << '\n';
  return report.passed() ? kOk : kCheckFailed;
}

struct ModeEvalFlags {
  KinematicsFlags kin;
  std::vector<double> x{0.0, 0.0, 0.0, 0.0};
  std::string branch = "pos";
  std::optional<double> rho0;
  double alpha = 1.0;
};

int cmd_mode_eval(const ModeEvalFlags& flags, std::ostream& out) {
  require(std::isfinite(flags.alpha) && flags.alpha > 0.0, "--alpha must be > 0");
  if (flags.rho0) require(std::isfinite(*flags.rho0) && *flags.rho0 > 0.0, "--rho0 must be > 0");
  for (double c : flags.x) require(std::isfinite(c), "--x components must be finite");

  ModeSpec spec;
  spec.ctx = flags.rho0 ? UnitContext::dimensionless(*flags.rho0, flags.alpha)
                        : UnitContext::si(flags.alpha);
  spec.part = flags.kin.particle();
  spec.branch = flags.branch == "neg" ? Branch::Negative : Branch::Positive;
  const DeviceState dev = flags.kin.device(spec.ctx.speed_of_light());

  const FourVector x{flags.x[0], flags.x[1], flags.x[2], flags.x[3]};
  const FourVector v = four_velocity(dev, spec.ctx.speed_of_light());
  const LogAmplitude phi = phi_mode(spec, x, v);

  Json j;
  j["units"] = spec.ctx.is_si() ? "si" : "dimensionless";
  j["alpha"] = spec.ctx.alpha;
  j["branch"] = flags.branch;
  j["log_mag"] = phi.log_mag;
  j["phase"] = phi.phase;
  j["support"] = phi.support;
  j["exponent_routes"] = {{"via_ratio", exponent_via_ratio(spec, dev)},
                          {"via_planck", exponent_via_planck(spec, dev)}};
  out << j.dump(2) << '\n';
  return kOk;
}

struct PdeFlags {
  PdeSweepConfig sweep;
  double tolerance = 1e-3;
  std::string csv;
};

int cmd_pde_residual(const PdeFlags& flags, std::ostream& out) {
  try {
    flags.sweep.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  require(std::isfinite(flags.tolerance) && flags.tolerance > 0.0, "--tolerance must be > 0");

  const PdeSweepResult result = pde_sweep(flags.sweep);
  std::vector<PendingFile> files;
  if (!flags.csv.empty()) {
    std::vector<ResidualReport> reports;
    reports.reserve(result.points.size());
    for (const auto& p : result.points) reports.push_back(p.report);
    std::ostringstream csv;
    write_residual_csv(csv, reports);
    files.push_back({flags.csv, csv.str()});
  }
  flush(files);

  const bool passed = result.max_rel_residual < flags.tolerance &&
                      result.convergence_slope >= 1.8 && result.convergence_slope <= 2.2;
  Json j;
  j["max_rel_residual"] = result.max_rel_residual;
  j["convergence_slope"] = result.convergence_slope;
  j["min_point_slope"] = result.min_point_slope;
  j["max_point_slope"] = result.max_point_slope;
  j["points"] = result.points.size();
  j["m"] = flags.sweep.mass;
  j["rho0"] = flags.sweep.rho0;
  j["h"] = flags.sweep.h;
  j["h_sequence"] = flags.sweep.h_sequence;
  j["margin"] = flags.sweep.margin;
  j["seed"] = flags.sweep.seed;
  j["rng"] = Rng::kName;
  j["tolerance"] = flags.tolerance;
  j["passed"] = passed;
  out << j.dump(2) << '\n';
  return passed ? kOk : kCheckFailed;
}

struct TransitionFlags {
  double n_min = 1.0;
  double n_max = 1e26;
  std::size_t points = 101;
  std::string spacing = "log";
  double alpha = 1.0;
  double accel_ratio = 0.0;
  double cutoff_log10 = -3.0;
  std::optional<double> nucleon_mass;
  std::optional<double> planck_mass;
  std::string csv;
  std::string svg;
};

int cmd_transition(const TransitionFlags& flags, std::ostream& out) {
  require(std::isfinite(flags.n_min) && flags.n_min >= 1.0, "--n-min must be >= 1");
  require(std::isfinite(flags.n_max) && flags.n_max > flags.n_min, "--n-max must exceed --n-min");
  require(flags.points >= 2, "--points must be >= 2");
  require(std::isfinite(flags.alpha) && flags.alpha > 0.0, "--alpha must be > 0");
  require(std::isfinite(flags.accel_ratio) && flags.accel_ratio >= 0.0, "--accel-ratio must be >= 0");
  require(std::isfinite(flags.cutoff_log10) && flags.cutoff_log10 < 0.0, "--cutoff-log10 must be < 0");
  if (flags.nucleon_mass) require(*flags.nucleon_mass > 0.0, "--nucleon-mass must be > 0");
  if (flags.planck_mass) require(*flags.planck_mass > 0.0, "--planck-mass must be > 0");

  UnitContext ctx = UnitContext::si(flags.alpha);
  if (flags.nucleon_mass) ctx.constants.nucleon_mass = *flags.nucleon_mass;
  ctx.planck_mass_override = flags.planck_mass;

  ObjectModel tmpl;
  tmpl.nucleon_mass = ctx.constants.nucleon_mass;
  tmpl.accel_ratio = flags.accel_ratio;
  tmpl.alpha = flags.alpha;

  const Spacing spacing = flags.spacing == "linear" ? Spacing::Linear : Spacing::Log;
  const TransitionCurve curve =
      transition_curve(flags.n_min, flags.n_max, flags.points, spacing, tmpl, ctx);
  const double ln_cutoff = flags.cutoff_log10 * std::log(10.0);

  ObjectModel avogadro_object = tmpl;
  avogadro_object.n_nucleons = ctx.constants.avogadro;
  const double ln_avogadro = macro_state_ln_bound(avogadro_object, ctx);

  std::vector<PendingFile> files;
  if (!flags.csv.empty()) {
    std::ostringstream csv;
    write_transition_csv(csv, curve);
    files.push_back({flags.csv, csv.str()});
  }
  if (!flags.svg.empty()) {
    files.push_back({flags.svg, render_transition_svg(curve, flags.cutoff_log10)});
  }
  flush(files);

  Json j;
  j["quantity"] = "upper bound on ln|psi_mac|, A'=1";
  j["alpha"] = flags.alpha;
  j["accel_ratio"] = flags.accel_ratio;
  j["nucleon_mass"] = tmpl.nucleon_mass;
  j["planck_mass"] = planck_mass(ctx);
  j["ln_per_nucleon"] = rest_state_ln_magnitude(tmpl.nucleon_mass, tmpl.accel_ratio, tmpl.alpha, ctx);
  j["avogadro"] = ctx.constants.avogadro;
  j["avogadro_ln_magnitude"] = ln_avogadro;
  j["avogadro_log10_magnitude"] = ln_avogadro / std::log(10.0);
  j["cutoff_log10"] = flags.cutoff_log10;
  j["threshold_n"] = classicality_threshold(tmpl, ctx, ln_cutoff);
  j["samples"] = curve.samples.size();
  j["spacing"] = spacing == Spacing::Log ? "log" : "linear";
  out << j.dump(2) << '\n';
  return kOk;
}

struct FockFlags {
  std::size_t modes = 3;
  int cutoff = 4;
  double cell_volume = 1.0;
};

int cmd_fock_check(const FockFlags& flags, std::ostream& out) {
  require(flags.modes >= 1, "--modes must be >= 1");
  require(flags.cutoff >= 2, "--cutoff must be >= 2");
  require(std::isfinite(flags.cell_volume) && flags.cell_volume > 0.0, "--cell-volume must be > 0");
  try {
    fock_dimension(flags.modes, flags.cutoff);
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }

  const CommutatorReport report =
      commutator_check(ModeLattice::line(flags.modes, flags.cell_volume), flags.cutoff);
  const bool passed = report.max_deviation < 1e-12;
  Json j;
  j["max_deviation"] = report.max_deviation;
  j["subspace_dim"] = report.subspace_dim;
  j["modes"] = flags.modes;
  j["cutoff"] = flags.cutoff;
  j["cell_volume"] = flags.cell_volume;
  out << j.dump(2) << '\n';
  return passed ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal-proper-acceleration scalar field: evaluation and verification"};
  app.name("mpa");
  app.require_subcommand(1);
  // --h is the stencil step of pde-residual, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  double constants_alpha = 1.0;
  auto* constants = app.add_subcommand("constants", "Physical constants and derived scales (JSON)");
  constants->add_option("--alpha", constants_alpha, "Order-unity factor in a_M");

  KinematicsFlags kin;
  auto* kinematics = app.add_subcommand("kinematics", "Four-vectors and a.v/a for one scenario (SI)");
  kin.attach(kinematics, true);

  ScanFlags scan;
  auto* scan_cmd = app.add_subcommand("inequality-scan", "Seeded check of gamma F(x) >= bound >= 1");
  scan_cmd->add_option("--samples", scan.samples, "Number of random scenarios");
  scan_cmd->add_option("--seed", scan.seed, "RNG seed");
  scan_cmd->add_option("--tolerance", scan.tolerance, "Scale-relative tolerance");
  scan_cmd->add_option("--csv", scan.csv, "Write violations CSV here");

  ModeEvalFlags mode;
  auto* mode_cmd = app.add_subcommand("mode-eval", "Evaluate phi(x, v) and the suppression exponent");
  mode.kin.attach(mode_cmd, true);
  mode_cmd->add_option("--x", mode.x, "Spacetime point t,x,y,z")->expected(4)->delimiter(',');
  mode_cmd->add_option("--branch", mode.branch, "Frequency branch")
      ->check(CLI::IsMember({"pos", "neg"}));
  mode_cmd->add_option("--rho0", mode.rho0, "Use dimensionless units (c = hbar = 1) with this rho0");
  mode_cmd->add_option("--alpha", mode.alpha, "Order-unity factor in a_M");

  PdeFlags pde;
  auto* pde_cmd = app.add_subcommand("pde-residual", "Finite-difference residual of the 8-D field equation");
  pde_cmd->add_option("--m", pde.sweep.mass, "Dimensionless mass");
  pde_cmd->add_option("--rho0", pde.sweep.rho0, "Dimensionless rho0 in [0.01, 10]");
  pde_cmd->add_option("--h", pde.sweep.h, "Stencil step for the residual table");
  pde_cmd->add_option("--points", pde.sweep.points, "Number of interior sample points");
  pde_cmd->add_option("--seed", pde.sweep.seed, "RNG seed");
  pde_cmd->add_option("--margin", pde.sweep.margin, "Minimum |a.v/a| on every stencil (>= 0.1)");
  pde_cmd->add_option("--tolerance", pde.tolerance, "Pass threshold for the max relative residual");
  pde_cmd->add_option("--csv", pde.csv, "Write the per-point residual CSV here");

  TransitionFlags tr;
  auto* tr_cmd = app.add_subcommand("transition", "Quantum-to-classical transition curve");
  tr_cmd->add_option("--n-min", tr.n_min, "Smallest nucleon count (>= 1)");
  tr_cmd->add_option("--n-max", tr.n_max, "Largest nucleon count");
  tr_cmd->add_option("--points", tr.points, "Number of samples");
  tr_cmd->add_option("--spacing", tr.spacing, "Grid spacing")->check(CLI::IsMember({"log", "linear"}));
  tr_cmd->add_option("--alpha", tr.alpha, "Order-unity factor in a_M");
  tr_cmd->add_option("--accel-ratio", tr.accel_ratio, "|a|/a of the object");
  tr_cmd->add_option("--cutoff-log10", tr.cutoff_log10, "Classicality cutoff on log10|psi|");
  tr_cmd->add_option("--nucleon-mass", tr.nucleon_mass, "Nucleon mass in kg (default 1.7e-27)");
  tr_cmd->add_option("--planck-mass", tr.planck_mass, "Pin m_Pl in kg instead of (hbar c/G)^1/2");
  tr_cmd->add_option("--csv", tr.csv, "Write the curve CSV here");
  tr_cmd->add_option("--svg", tr.svg, "Write the curve SVG here");

  FockFlags fock;
  auto* fock_cmd = app.add_subcommand("fock-check", "Commutation relations on a truncated Fock space");
  fock_cmd->add_option("--modes", fock.modes, "Number of lattice modes");
  fock_cmd->add_option("--cutoff", fock.cutoff, "Maximum occupation per mode (>= 2)");
  fock_cmd->add_option("--cell-volume", fock.cell_volume, "Lattice cell volume");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (constants->parsed()) return cmd_constants(constants_alpha, out);
    if (kinematics->parsed()) return cmd_kinematics(kin, out);
    if (scan_cmd->parsed()) return cmd_inequality_scan(scan, out);
    if (mode_cmd->parsed()) return cmd_mode_eval(mode, out);
    if (pde_cmd->parsed()) return cmd_pde_residual(pde, out);
    if (tr_cmd->parsed()) return cmd_transition(tr, out);
    if (fock_cmd->parsed()) return cmd_fock_check(fock, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  err << app.help();
  return kUsage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace mpa::cli
