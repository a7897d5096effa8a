#pragma once

// SVG drawing of a planar framework: one <line> per edge, one <circle> plus
// <text> label per vertex. Coordinates are scaled uniformly into an 800×800
// viewport with a 5% margin and y pointing up. Doubles are used here only;
// the drawing is cosmetic.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "chordrig/error.hpp"
#include "chordrig/framework.hpp"
#include "chordrig/stress.hpp"

namespace chordrig {

inline constexpr double svg_size = 800.0;
inline constexpr double svg_margin = 0.05 * svg_size;

namespace detail {
inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}
}  // namespace detail

/// With a stress matrix, edges with ω_ij > 0 are red, ω_ij < 0 blue and
/// unstressed edges grey.
inline std::string render_svg(const Framework& fw, const StressMatrix* stress = nullptr) {
  if (fw.dim() != 2) throw Error(Errc::unsupported_dimension, "plotting needs r = 2, got r = " + std::to_string(fw.dim()));
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (Vertex v = 1; v <= fw.order(); ++v) {
    const double x = fw.point(v)[0].get_d(), y = fw.point(v)[1].get_d();
    if (v == 1) {
      xmin = xmax = x;
      ymin = ymax = y;
    }
    xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  }
  const double inner = svg_size - 2 * svg_margin;
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double scale = span > 0 ? inner / span : 1.0;
  // centre the bounding box inside the inner square
  const double ox = svg_margin + (inner - scale * (xmax - xmin)) / 2;
  const double oy = svg_margin + (inner - scale * (ymax - ymin)) / 2;
  auto sx = [&](Vertex v) { return ox + scale * (fw.point(v)[0].get_d() - xmin); };
  auto sy = [&](Vertex v) { return svg_size - (oy + scale * (fw.point(v)[1].get_d() - ymin)); };

  std::ostringstream out;
  out << R"(<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">)" << '\n';
  out << R"(<rect width="800" height="800" fill="white"/>)" << '\n';
  for (const auto& [i, j] : fw.graph().edges()) {
    std::string colour = "#444444";
    if (stress) {
      const int sign = -sgn(stress->matrix()(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
      colour = sign > 0 ? "#c0392b" : sign < 0 ? "#2471a3" : "#aaaaaa";
    }
    out << "<line x1=\"" << detail::fmt(sx(i)) << "\" y1=\"" << detail::fmt(sy(i)) << "\" x2=\"" << detail::fmt(sx(j))
        << "\" y2=\"" << detail::fmt(sy(j)) << "\" stroke=\"" << colour << "\" stroke-width=\"3\"/>\n";
  }
  for (Vertex v = 1; v <= fw.order(); ++v) {
    out << "<circle cx=\"" << detail::fmt(sx(v)) << "\" cy=\"" << detail::fmt(sy(v)) << "\" r=\"9\" fill=\"black\"/>\n";
    out << "<text x=\"" << detail::fmt(sx(v) + 12) << "\" y=\"" << detail::fmt(sy(v) - 12)
        << "\" font-family=\"sans-serif\" font-size=\"20\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace chordrig
