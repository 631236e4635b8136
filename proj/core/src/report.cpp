#include "mpa/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "mpa/format.hpp"

namespace mpa {
namespace {

std::string fixed2(double value) {
  std::array<char, 48> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, 2);
  return {buf.data(), res.ptr};
}

std::string general4(double value) {
  std::array<char, 48> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 4);
  return {buf.data(), res.ptr};
}

struct PlotFrame {
  static constexpr double width = 720.0;
  static constexpr double height = 480.0;
  static constexpr double left = 90.0;
  static constexpr double right = 30.0;
  static constexpr double top = 40.0;
  static constexpr double bottom = 60.0;

  double x_lo, x_hi, y_lo, y_hi;

  double px(double x) const {
    return left + (x - x_lo) / (x_hi - x_lo) * (width - left - right);
  }
  double py(double y) const {
    return height - bottom - (y - y_lo) / (y_hi - y_lo) * (height - top - bottom);
  }
};

}  // namespace

void write_transition_csv(std::ostream& out, const TransitionCurve& curve) {
  out << kTransitionCsvHeader << '\n';
  for (const auto& s : curve.samples) {
    out << shortest(s.n_nucleons) << ',' << shortest(s.mass_kg) << ',' << shortest(s.ln_magnitude)
        << ',' << shortest(s.log10_magnitude) << '\n';
  }
}

void write_violation_csv(std::ostream& out, const std::vector<BoundViolation>& violations) {
  out << kViolationCsvHeader << '\n';
  for (const auto& v : violations) {
    out << shortest(v.beta) << ',' << shortest(v.theta) << ',' << shortest(v.x) << ','
        << shortest(v.gamma_f) << ',' << shortest(v.bound) << '\n';
  }
}

void write_residual_csv(std::ostream& out, const std::vector<ResidualReport>& reports) {
  out << kResidualCsvHeader << '\n';
  for (const auto& r : reports) {
    for (double coord : r.point) out << shortest(coord) << ',';
    out << shortest(std::abs(r.residual)) << ',' << shortest(r.relative_residual) << ','
        << shortest(r.h) << '\n';
  }
}

std::string render_transition_svg(const TransitionCurve& curve, double cutoff_log10) {
  PlotFrame frame{0.0, 1.0, cutoff_log10, 0.0};
  if (!curve.samples.empty()) {
    frame.x_lo = std::log10(curve.samples.front().n_nucleons);
    frame.x_hi = std::log10(curve.samples.back().n_nucleons);
    for (const auto& s : curve.samples) {
      frame.y_lo = std::min(frame.y_lo, s.log10_magnitude);
      frame.y_hi = std::max(frame.y_hi, s.log10_magnitude);
    }
  }
  if (frame.x_hi <= frame.x_lo) frame.x_hi = frame.x_lo + 1.0;
  if (frame.y_hi <= frame.y_lo) frame.y_lo = frame.y_hi - 1.0;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed2(PlotFrame::width)
      << "\" height=\"" << fixed2(PlotFrame::height) << "\" viewBox=\"0 0 "
      << fixed2(PlotFrame::width) << ' ' << fixed2(PlotFrame::height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<title>Macroscopic state bound (alpha=" << shortest(curve.alpha)
      << ", |a|/a=" << shortest(curve.accel_ratio) << ")</title>\n";

  // Axes.
  const double x0 = frame.px(frame.x_lo), x1 = frame.px(frame.x_hi);
  const double y0 = frame.py(frame.y_lo), y1 = frame.py(frame.y_hi);
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fixed2(x0) << "\" y1=\"" << fixed2(y0) << "\" x2=\"" << fixed2(x1)
      << "\" y2=\"" << fixed2(y0) << "\"/>\n"
      << "<line x1=\"" << fixed2(x0) << "\" y1=\"" << fixed2(y0) << "\" x2=\"" << fixed2(x0)
      << "\" y2=\"" << fixed2(y1) << "\"/>\n</g>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = frame.x_lo + (frame.x_hi - frame.x_lo) * i / kTicks;
    const double fy = frame.y_lo + (frame.y_hi - frame.y_lo) * i / kTicks;
    svg << "<text x=\"" << fixed2(frame.px(fx)) << "\" y=\"" << fixed2(y0 + 16.0)
        << "\" text-anchor=\"middle\">" << general4(fx) << "</text>\n";
    svg << "<text x=\"" << fixed2(x0 - 6.0) << "\" y=\"" << fixed2(frame.py(fy) + 4.0)
        << "\" text-anchor=\"end\">" << general4(fy) << "</text>\n";
  }
  svg << "<text x=\"" << fixed2((x0 + x1) / 2.0) << "\" y=\"" << fixed2(PlotFrame::height - 18.0)
      << "\" text-anchor=\"middle\">log10(nucleon count)</text>\n";
  svg << "<text x=\"18.00\" y=\"" << fixed2((y0 + y1) / 2.0)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18.00 " << fixed2((y0 + y1) / 2.0)
      << ")\">log10 |psi| bound</text>\n</g>\n";

  const double yc = frame.py(cutoff_log10);
  svg << "<line x1=\"" << fixed2(x0) << "\" y1=\"" << fixed2(yc) << "\" x2=\"" << fixed2(x1)
      << "\" y2=\"" << fixed2(yc)
      << "\" stroke=\"firebrick\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

  svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    const auto& s = curve.samples[i];
    if (i) svg << ' ';
    svg << fixed2(frame.px(std::log10(s.n_nucleons))) << ',' << fixed2(frame.py(s.log10_magnitude));
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace mpa
