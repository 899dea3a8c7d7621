#ifndef GYQS_HARNESS_CONTOUR_HPP
#define GYQS_HARNESS_CONTOUR_HPP

// Grid evaluation of a*(tau)/H*(tau) over the simplex and a banded SVG heat map.

#include <gyqs/analysis.hpp>
#include <gyqs/harness/format.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gyqs::harness {

struct ContourCell {
  double tau1, tau2, value;
};

struct ContourGrid {
  CostMeasure measure;
  double step;
  std::vector<ContourCell> cells;  ///< tau1 major, tau2 minor; only tau1 + tau2 <= 1
  ContourCell minimum;
  double center;                   ///< value at (1/3, 1/3, 1/3)
};

inline ContourGrid contour_grid(CostMeasure m, double step) {
  if (!(step > 0.0) || step > 0.5) throw std::invalid_argument("grid step must be in (0, 0.5]");
  const long long steps = static_cast<long long>(std::floor(1.0 / step + 1e-9));
  if (steps > 4000) throw std::invalid_argument("grid step too small");
  ContourGrid g{m, step, {}, {0, 0, std::numeric_limits<double>::infinity()}, 0.0};
  for (long long i = 0; i <= steps; ++i)
    for (long long j = 0; i + j <= steps; ++j) {
      const double a = static_cast<double>(i) * step, b = static_cast<double>(j) * step;
      const double v = continuous_ratio(Tau{a, b, std::max(0.0, 1.0 - a - b)}, m);
      g.cells.push_back({a, b, v});
      if (v < g.minimum.value) g.minimum = g.cells.back();
    }
  g.center = continuous_ratio(Tau{1.0 / 3, 1.0 / 3, 1.0 / 3}, m);
  return g;
}

inline std::string contour_csv(const ContourGrid& g) {
  CsvWriter w;
  w.row("tau1", "tau2", "ratio");
  for (const auto& c : g.cells) w.row(fmt6(c.tau1), fmt6(c.tau2), fmt6(c.value));
  return w.str();
}

inline std::string contour_summary_csv(const ContourGrid& g) {
  CsvWriter w;
  w.row("measure", "step", "cells", "center", "min_tau1", "min_tau2", "min_value");
  w.row(to_string(g.measure), fmt6(g.step), g.cells.size(), fmt6(g.center), fmt6(g.minimum.tau1),
        fmt6(g.minimum.tau2), fmt6(g.minimum.value));
  return w.str();
}

/// Heat table in the (tau1, tau2) plane, quantized into 12 bands between the
/// grid minimum and the 90th percentile so that level sets read like contours.
inline std::string contour_svg(const ContourGrid& g) {
  constexpr double size = 480, margin = 50;
  std::vector<double> finite;
  for (const auto& c : g.cells)
    if (std::isfinite(c.value)) finite.push_back(c.value);
  if (finite.empty()) throw std::logic_error("contour_svg: no finite values");
  std::sort(finite.begin(), finite.end());
  const double lo = finite.front();
  const double hi = std::max(finite[finite.size() * 9 / 10], lo + 1e-12);
  constexpr int bands = 12;

  auto color = [&](double v) {
    if (!std::isfinite(v)) return std::string("#202020");
    const double u = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
    const double q = std::min(std::floor(u * bands), bands - 1.0) / (bands - 1.0);
    const int r = static_cast<int>(30 + 225 * q), gr = static_cast<int>(60 + 170 * std::sin(q * 3.14159)),
              b = static_cast<int>(200 - 180 * q);
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, gr, b);
    return std::string(buf);
  };

  const double cell = size * g.step;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin << "\" height=\""
    << size + 2 * margin << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& c : g.cells) {
    const double x = margin + c.tau1 * size - cell / 2, y = margin + (1.0 - c.tau2) * size - cell / 2;
    o << "<rect x=\"" << fmt6(x) << "\" y=\"" << fmt6(y) << "\" width=\"" << fmt6(cell) << "\" height=\""
      << fmt6(cell) << "\" fill=\"" << color(c.value) << "\"/>\n";
  }
  o << "<circle cx=\"" << fmt6(margin + g.minimum.tau1 * size) << "\" cy=\""
    << fmt6(margin + (1.0 - g.minimum.tau2) * size) << "\" r=\"5\" fill=\"none\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << margin << "\" y1=\"" << margin + size << "\" x2=\"" << margin + size << "\" y2=\""
    << margin + size << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << margin << "\" y1=\"" << margin + size << "\" x2=\"" << margin << "\" y2=\"" << margin
    << "\" stroke=\"black\"/>\n";
  o << "<text x=\"" << margin + size / 2 << "\" y=\"" << margin + size + 30 << "\">tau1</text>\n";
  o << "<text x=\"10\" y=\"" << margin + size / 2 << "\">tau2</text>\n";
  o << "<text x=\"" << margin << "\" y=\"25\">" << to_string(g.measure) << ": min " << fmt6(g.minimum.value)
    << " at (" << fmt6(g.minimum.tau1) << ", " << fmt6(g.minimum.tau2) << ")</text>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace gyqs::harness

#endif  // GYQS_HARNESS_CONTOUR_HPP
