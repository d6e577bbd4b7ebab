#pragma once

// Upper bounds M >= m for the Friedrichs constant of a star-shaped domain and
// the derived lower bounds for the inf-sup constant. All quantities are
// evaluated on normalized boundaries (max f = 1) and are scale-free.
//
// Core objective, with t = f'/f and alpha in (0, 1]:
//   P(alpha, theta) = 1/(alpha f^2) * (1 + t^2 / (1 - alpha f^2))
//   m = sup_theta inf_alpha P = sup_theta (sqrt(1+t^2) + |t|)^2   (claimed bound)
//   M = inf_alpha sup_theta P                                     (proven bound)

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infsup/geometry.hpp"

namespace infsup {

// P at explicit (f, t). Saturates to +infinity where alpha f^2 >= 1 with
// t != 0; the t = 0 limit is 1/(alpha f^2) regardless.
inline double P_value(double alpha, double f, double t) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw ArgumentError("P_value: alpha must lie in (0, 1]");
  if (!(f > 0.0)) throw ArgumentError("P_value: radius must be positive");
  const double u = alpha * f * f;
  if (t == 0.0) return 1.0 / u;
  const double denom = 1.0 - u;
  if (denom <= 0.0) return inf;
  return (1.0 + t * t / denom) / u;
}

// P on a boundary; at joints the larger one-sided slope governs.
inline double P(const PolarBoundary& b, double alpha, double theta) {
  return P_value(alpha, b.f(theta), b.fprime(theta).max_abs() / b.f(theta));
}

// Per-direction minimizer of P over alpha: alpha(theta) = zeta / f^2 where
// zeta is the root in (0, 1] of zeta^2 - 2(1+t^2) zeta + (1+t^2) = 0.
inline double alpha_theta(const PolarBoundary& b, double theta) {
  const double f = b.f(theta);
  const double t = b.fprime(theta).max_abs() / f;
  const double one_t2 = 1.0 + t * t;
  const double zeta = one_t2 - std::fabs(t) * std::sqrt(one_t2);
  return zeta / (f * f);
}

struct ExtremalBound {
  double value = 0.0;
  double alpha_star = 0.0;       // minimizing alpha (M); inner minimizer at
                                 // the worst direction (m)
  double theta_star = 0.0;       // witness direction
  bool alpha_at_boundary = false;  // infimum approached at alpha -> 1
  bool degenerate = false;         // rho_max = 0: bound is vacuous (+inf)
};

// Claimed (Horgan-Payne) bound: sup_theta (sqrt(1+t^2) + |t|)^2.
inline ExtremalBound m_of(const PolarBoundary& b, const Options& opt = {}) {
  ExtremalBound out;
  if (!(rho_max(b, opt).value > 0.0)) {
    out.value = inf;
    out.degenerate = true;
    return out;
  }
  const Extremum sup_t = sup_abs_t(b, opt);
  const double T = sup_t.value;
  const double root = std::hypot(1.0, T);
  out.value = (root + T) * (root + T);
  out.theta_star = sup_t.theta;
  out.alpha_star = (1.0 + T * T - T * root) /
                   (b.f(sup_t.theta) * b.f(sup_t.theta));
  return out;
}

// Proven bound: golden-section over alpha in [1e-9, 1 - 1e-9] of the sampled
// sup_theta P. When the minimizer presses the right edge the infimum over the
// open interval equals the limit at 1, so Q(1) is evaluated (with the +inf
// sentinel) and returned when smaller, flagged alpha_at_boundary.
inline ExtremalBound M_of(const PolarBoundary& b, const Options& opt = {}) {
  ExtremalBound out;
  if (!(rho_max(b, opt).value > 0.0)) {
    out.value = inf;
    out.degenerate = true;
    return out;
  }
  const auto samples = sample_pieces(b, opt);
  auto sup_P = [&](double alpha) -> Extremum {
    return detail::maximize_over_boundary(
        b, samples,
        [alpha](std::size_t, double, double fv, double tv) {
          return P_value(alpha, fv, tv);
        },
        opt);
  };
  constexpr double kDelta = 1e-9;
  const auto g = golden_min([&](double a) { return sup_P(a).value; }, kDelta,
                            1.0 - kDelta, opt.tol, 200);
  Extremum best = sup_P(g.x);
  out.value = best.value;
  out.alpha_star = g.x;
  out.theta_star = best.theta;
  if (g.at_upper) {
    out.alpha_at_boundary = true;
    const Extremum closed = sup_P(1.0);
    if (closed.value <= out.value) {
      out.value = closed.value;
      out.alpha_star = 1.0;
      out.theta_star = closed.theta;
    }
  }
  return out;
}

// ==== polygon closed forms ====

namespace detail {

// Side statistics (larger endpoint radius, side distance), normalized so the
// largest vertex radius is 1.
inline std::vector<std::pair<double, double>> normalized_side_stats(
    const PolygonSides& sides) {
  const std::size_t n = sides.r.size();
  double rmax = 0.0;
  for (double r : sides.r) rmax = std::max(rmax, r);
  if (!(rmax > 0.0)) throw ArgumentError("polygon sides: no positive radius");
  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double r = std::max(sides.r[j], sides.r[(j + 1) % n]) / rmax;
    out.emplace_back(r, sides.d[j] / rmax);
  }
  return out;
}

}  // namespace detail

// max over sides of (r/d + sqrt(r^2/d^2 - 1))^2.
inline double polygon_m(const PolygonSides& sides) {
  double m = 0.0;
  for (const auto& [r, d] : detail::normalized_side_stats(sides)) {
    const double q = r / d;
    const double root = std::sqrt(std::max(q * q - 1.0, 0.0));
    m = std::max(m, (q + root) * (q + root));
  }
  return m;
}

inline double polygon_m(const PolygonSpec& spec) {
  return polygon_m(polygon_sides(spec));
}

struct PolygonBound {
  double M = 0.0;
  double alpha_star = 0.0;
};

// Finite-max counterpart of M_of: inf over alpha of
// max_j (1/(alpha d_j^2)) (1 - alpha d_j^2)/(1 - alpha r_j^2), which is
// P_value at f = r_j, t_j = sqrt(r_j^2/d_j^2 - 1).
inline PolygonBound polygon_M(const PolygonSides& sides, const Options& opt = {}) {
  const auto stats = detail::normalized_side_stats(sides);
  auto Q = [&](double alpha) {
    double q = 0.0;
    for (const auto& [r, d] : stats) {
      const double t = std::sqrt(std::max(r * r / (d * d) - 1.0, 0.0));
      q = std::max(q, P_value(alpha, r, t));
    }
    return q;
  };
  constexpr double kDelta = 1e-9;
  const auto g = golden_min(Q, kDelta, 1.0 - kDelta, opt.tol, 200);
  PolygonBound out{g.value, g.x};
  if (g.at_upper) {
    const double closed = Q(1.0);
    if (closed <= out.M) {
      out.M = closed;
      out.alpha_star = 1.0;
    }
  }
  return out;
}

inline PolygonBound polygon_M(const PolygonSpec& spec, const Options& opt = {}) {
  return polygon_M(polygon_sides(spec), opt);
}

struct ClosedFormDM {
  double M = 1.0;
  double alpha_star = 1.0;
};

// Cyclic or circumscribed polygons (normalized d = inradius / circumradius):
// M = (1/d + sqrt(1/d^2 - 1))^2 at alpha_0 = 1/d^2 - sqrt(1/d^4 - 1/d^2).
inline ClosedFormDM closed_form_dM(double d) {
  if (!(d > 0.0)) throw ArgumentError("closed_form_dM: d must be positive");
  if (d >= 1.0) return {1.0, 1.0};
  const double inv = 1.0 / d;
  const double root = std::sqrt(inv * inv - 1.0);
  return {(inv + root) * (inv + root),
          inv * inv - std::sqrt(inv * inv * (inv * inv - 1.0))};
}

// ==== radii-ratio bounds ====

struct RadiiRatio {
  double rho = 0.0;   // largest kernel-disk radius (normalized)
  double R = 1.0;     // circumradius (normalized)
  double tau = 0.0;   // arccos(rho/R)
  double psi = 0.0;   // pi/2 - tau
  double m_tau = 1.0; // upper bound for Gamma from the ratio alone
  double beta_lower = 0.0;  // = sin(psi/2) = (1 + m_tau)^{-1/2}
};

inline RadiiRatio radii_ratio_bounds(double rho, double R) {
  if (!(rho > 0.0) || !(R > 0.0) || rho > R * (1.0 + 1e-12))
    throw ArgumentError("radii_ratio_bounds: need 0 < rho <= R");
  RadiiRatio out;
  out.rho = rho;
  out.R = R;
  const double x = std::min(rho / R, 1.0);
  out.tau = std::acos(x);
  out.psi = 0.5 * pi - out.tau;
  out.m_tau = closed_form_dM(x).M;
  out.beta_lower = x / std::sqrt(2.0) / std::sqrt(1.0 + std::sqrt(1.0 - x * x));
  const double via_psi = std::sin(0.5 * out.psi);
  if (std::fabs(out.beta_lower - via_psi) > 1e-12)
    throw NumericError("radii ratio identity check failed",
                       std::fabs(out.beta_lower - via_psi));
  return out;
}

inline RadiiRatio radii_ratio_bounds(const PolarBoundary& b,
                                     const Options& opt = {}) {
  return radii_ratio_bounds(rho_max(b, opt).value, r_min(b));
}

// ==== constant conversions ====

enum class ConstantKind { Beta, BabuskaAziz, Friedrichs, Korn };

struct ConstantSet {
  double beta = 0.0;   // inf-sup constant, in (0, 1]
  double C = 0.0;      // Babuska-Aziz, = 1/beta^2, >= 1
  double Gamma = 0.0;  // Friedrichs, = C - 1, >= 0
  double K = 0.0;      // Korn, = 2C; valid for smooth domains only
};

inline ConstantSet convert(ConstantKind kind, double value) {
  double C = 0.0;
  switch (kind) {
    case ConstantKind::Beta:
      if (!(value > 0.0) || value > 1.0)
        throw ArgumentError("convert: beta must lie in (0, 1]");
      C = 1.0 / (value * value);
      break;
    case ConstantKind::BabuskaAziz:
      if (!(value >= 1.0)) throw ArgumentError("convert: C must be >= 1");
      C = value;
      break;
    case ConstantKind::Friedrichs:
      if (!(value >= 0.0)) throw ArgumentError("convert: Gamma must be >= 0");
      C = value + 1.0;
      break;
    case ConstantKind::Korn:
      if (!(value >= 2.0)) throw ArgumentError("convert: K must be >= 2");
      C = 0.5 * value;
      break;
  }
  return {1.0 / std::sqrt(C), C, C - 1.0, 2.0 * C};
}

// ==== Horgan-Payne lower bound (claimed) ====

struct HPLower {
  double omega = 0.0;    // Horgan-Payne angle
  double m = 0.0;        // claimed Gamma bound
  double beta = 0.0;     // sin(omega/2)
  double beta_sq = 0.0;
};

// sin(omega/2) with the algebraic identity sin(omega/2) = (1+m)^{-1/2}
// checked to 1e-12.
inline HPLower hp_lower_bound(const PolarBoundary& b, const Options& opt = {}) {
  const double T = sup_abs_t(b, opt).value;
  const double root = std::hypot(1.0, T);
  HPLower out;
  out.omega = 0.5 * pi - std::atan(T);
  out.m = (root + T) * (root + T);
  out.beta = std::sin(0.5 * out.omega);
  out.beta_sq = out.beta * out.beta;
  const double via_m = 1.0 / std::sqrt(1.0 + out.m);
  if (std::fabs(out.beta - via_m) > 1e-12)
    throw NumericError("Horgan-Payne identity check failed",
                       std::fabs(out.beta - via_m));
  return out;
}

// ==== assembled report ====

struct BoundReport {
  double omega_hp = 0.0;
  double m = 0.0;
  double M = 0.0;
  double alpha_star = 0.0;
  double rho_max = 0.0;              // normalized
  double r_min = 1.0;                // normalized
  double normalization_scale = 1.0;  // input circumradius
  double tau = 0.0;
  double psi = 0.0;
  double m_tau = 0.0;
  double beta_lower_proven = 0.0;      // (1 + M)^{-1/2}
  double beta_lower_hp_claimed = 0.0;  // sin(omega/2), not proven in general
  double beta_lower_radii = 0.0;       // (1 + m_tau)^{-1/2}
  std::optional<double> beta_upper;    // from a cut, when available
  double c_upper_proven = 0.0;
  double gamma_upper_proven = 0.0;
  double k_upper_smooth_only = 0.0;
  bool alpha_at_boundary = false;
  bool degenerate = false;
  std::vector<std::pair<std::string, std::string>> provenance;
};

inline BoundReport compute_report(const PolarBoundary& b, const Options& opt = {}) {
  BoundReport rep;
  rep.normalization_scale = b.normalization_scale();
  rep.r_min = r_min(b);
  rep.rho_max = rho_max(b, opt).value;

  const ExtremalBound mm = m_of(b, opt);
  const ExtremalBound MM = M_of(b, opt);
  rep.m = mm.value;
  rep.M = MM.value;
  rep.alpha_star = MM.alpha_star;
  rep.alpha_at_boundary = MM.alpha_at_boundary;
  rep.degenerate = mm.degenerate || MM.degenerate;

  if (!rep.degenerate) {
    const HPLower hp = hp_lower_bound(b, opt);
    rep.omega_hp = hp.omega;
    rep.beta_lower_hp_claimed = hp.beta;
    const RadiiRatio rr = radii_ratio_bounds(b, opt);
    rep.tau = rr.tau;
    rep.psi = rr.psi;
    rep.m_tau = rr.m_tau;
    rep.beta_lower_radii = rr.beta_lower;
  }

  rep.gamma_upper_proven = rep.M;
  rep.c_upper_proven = 1.0 + rep.M;
  rep.k_upper_smooth_only = 2.0 * rep.c_upper_proven;
  rep.beta_lower_proven = 1.0 / std::sqrt(rep.c_upper_proven);

  rep.provenance = {
      {"gamma_upper_proven", "proven"},
      {"c_upper_proven", "proven"},
      {"k_upper_smooth_only", "smooth-only"},
      {"beta_lower_proven", "proven"},
      {"beta_lower_radii", "proven"},
      {"beta_lower_hp_claimed", "claimed"},
  };
  if (rep.degenerate) rep.provenance.emplace_back("m", "degenerate");
  if (rep.alpha_at_boundary)
    rep.provenance.emplace_back("alpha_star", "at-bracket-edge");
  return rep;
}

}  // namespace infsup
