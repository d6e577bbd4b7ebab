#pragma once

// Standalone SVG rendering of a boundary. Output is deterministic: fixed
// canvas, fixed sampling, fixed numeric precision, no external references.
// The boundary polyline is colored by the local ray angle gamma (blue where
// the boundary is orthogonal to the ray, red toward grazing); dashed circles
// mark rho_max and the outer radius.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "infsup/geometry.hpp"

namespace infsup {

namespace detail {

inline void append_fmt(std::string& out, const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  out += buf;
}

inline std::string gamma_color(double gamma, double gamma_max) {
  const double span = gamma_max > 1e-12 ? gamma_max : 1.0;
  const double u = std::clamp(gamma / span, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(255.0 * u));
  const int b = 255 - r;
  char buf[8];
  snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, 0x20, b);
  return buf;
}

}  // namespace detail

inline std::string render_svg(const PolarBoundary& b, const Options& opt = {}) {
  constexpr int size = 800;
  constexpr double margin = 60.0;
  const double scale = (size / 2.0 - margin);  // world radius 1 -> pixels
  const auto to_px = [&](double x, double y) {
    return std::pair{size / 2.0 + scale * x, size / 2.0 - scale * y};
  };

  struct Node {
    double x, y, gamma;
  };
  std::vector<std::vector<Node>> runs;
  double gamma_max = 0.0;
  for (const auto& p : b.pieces()) {
    const bool straight = std::holds_alternative<SegmentPiece>(p.shape);
    const int n = straight
                      ? 1
                      : std::max(16, static_cast<int>(std::ceil(
                                         256.0 * p.length() / two_pi)));
    std::vector<Node> run;
    run.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
      const double th = p.theta_start + p.length() * k / n;
      const double f = p.f(th);
      const double g = std::atan(std::abs(p.t(th)));
      run.push_back({f * std::cos(th), f * std::sin(th), g});
      gamma_max = std::max(gamma_max, g);
    }
    runs.push_back(std::move(run));
  }

  const double rho = rho_max(b, opt).value / b.normalization_scale();

  std::string out;
  out.reserve(1 << 16);
  detail::append_fmt(out,
                     "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                     "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                     size, size, size, size);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // dashed reference circles: outer radius (normalized 1) and rho_max
  {
    auto [cx, cy] = to_px(0.0, 0.0);
    detail::append_fmt(out,
                       "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" "
                       "fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" "
                       "stroke-dasharray=\"6 4\"/>\n",
                       cx, cy, scale);
    if (rho > 0.0)
      detail::append_fmt(out,
                         "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" "
                         "fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" "
                         "stroke-dasharray=\"2 4\"/>\n",
                         cx, cy, scale * rho);
    detail::append_fmt(
        out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"#333333\"/>\n", cx,
        cy);
  }

  for (const auto& run : runs) {
    for (size_t k = 0; k + 1 < run.size(); ++k) {
      const auto [x1, y1] = to_px(run[k].x, run[k].y);
      const auto [x2, y2] = to_px(run[k + 1].x, run[k + 1].y);
      const double g = 0.5 * (run[k].gamma + run[k + 1].gamma);
      detail::append_fmt(out,
                         "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" "
                         "y2=\"%.2f\" stroke=\"%s\" stroke-width=\"2\" "
                         "stroke-linecap=\"round\"/>\n",
                         x1, y1, x2, y2,
                         detail::gamma_color(g, gamma_max).c_str());
    }
  }

  detail::append_fmt(out,
                     "<text x=\"%.0f\" y=\"%.0f\" font-family=\"monospace\" "
                     "font-size=\"13\" fill=\"#333333\">rho/R = %.6f, "
                     "sup gamma = %.6f</text>\n",
                     margin * 0.5, size - margin * 0.4, rho, gamma_max);
  out += "</svg>\n";
  return out;
}

}  // namespace infsup
