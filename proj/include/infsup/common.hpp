#pragma once

// Shared basics: plane vectors, error taxonomy, angle helpers, float formatting.

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace infsup {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double inf = std::numeric_limits<double>::infinity();

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double angle() const { return std::atan2(y, x); }
};

inline Vec2 unit_dir(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Base class for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid caller-supplied values (negative radius, out-of-range constant, ...).
struct ArgumentError : Error {
  using Error::Error;
};

// Malformed boundary assembly: gaps, overlaps, discontinuous joints, bad roots.
struct StructureError : Error {
  using Error::Error;
};

// Domain fails (strict) star-shapedness around the chosen center.
// `theta` points at an offending direction when one is known.
struct StarShapeError : Error {
  double theta;
  explicit StarShapeError(const std::string& what, double theta_ = 0.0)
      : Error(what), theta(theta_) {}
};

// An iterative routine failed to reach its tolerance.
struct NumericError : Error {
  double achieved;
  explicit NumericError(const std::string& what, double achieved_ = 0.0)
      : Error(what), achieved(achieved_) {}
};

// Reduce to [0, 2*pi).
inline double wrap_angle(double theta) {
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

// Reduce to [base, base + 2*pi).
inline double wrap_into(double theta, double base) {
  return base + wrap_angle(theta - base);
}

// Shortest-path representative of `theta` nearest to `anchor`.
inline double nearest_rep(double theta, double anchor) {
  double d = std::remainder(theta - anchor, two_pi);
  return anchor + d;
}

// 17 significant digits: round-trips any double through text.
inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Shared knobs for grid-sampled suprema and iterative tolerances.
// INFSUP_GRID / INFSUP_TOL env vars map onto these in the CLI.
struct Options {
  int grid_n = 4096;    // target samples around the full circle
  double tol = 1e-10;   // relative tolerance for searches and quadrature
};

}  // namespace infsup
