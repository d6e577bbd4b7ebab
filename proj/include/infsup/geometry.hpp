#pragma once

// Piecewise-analytic polar boundaries r = f(theta) for bounded star-shaped
// plane domains, normalized so max f = 1. Four piece kinds (line segment,
// circular arc, logarithmic spiral, ellipse arc) with closed-form radius,
// derivative, and where available closed-form extremal statistics; everything
// else falls back to per-piece grids refined by golden-section.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "infsup/common.hpp"
#include "infsup/golden.hpp"
#include "infsup/quadrature.hpp"

namespace infsup {

// ==== piece kinds ====

// Chord of a straight line at distance `foot_distance` from the origin whose
// perpendicular foot lies in direction `foot_angle`: f = d / cos(theta - fa).
struct SegmentPiece {
  double foot_distance = 1.0;
  double foot_angle = 0.0;
};

// Arc of the circle |x - center| = radius. A polar ray can meet the circle
// twice; `far_root` picks the intersection farther from the origin.
struct CircularArcPiece {
  Vec2 center{0.0, 0.0};
  double radius = 1.0;
  bool far_root = true;
};

// f = start_radius * exp(direction * rate * (theta - ref_angle)); constant
// pitch angle, |f'/f| = rate.
struct LogSpiralPiece {
  double start_radius = 1.0;
  double rate = 1.0;
  int direction = -1;
  double ref_angle = 0.0;
};

// Arc of x^2/a^2 + y^2/b^2 = 1 centered at the origin, axes on x and y.
struct EllipseArcPiece {
  double semi_x = 1.0;
  double semi_y = 1.0;
};

using PieceShape =
    std::variant<SegmentPiece, CircularArcPiece, LogSpiralPiece, EllipseArcPiece>;

// A piece owns the angular interval [theta_start, theta_end]; theta_end may
// exceed 2*pi for a piece wrapping through the angle origin.
struct BoundaryPiece {
  PieceShape shape;
  double theta_start = 0.0;
  double theta_end = 0.0;

  double length() const { return theta_end - theta_start; }
  bool is_segment() const { return std::holds_alternative<SegmentPiece>(shape); }

  double f(double theta) const;
  double fprime(double theta) const;
  double t(double theta) const { return fprime(theta) / f(theta); }

  double sup_f() const;
  double inf_f() const;
  std::optional<double> exact_area() const;  // integral of f^2/2
  struct Stat {
    double value;
    double theta;  // witness angle inside the piece interval
  };
  std::optional<Stat> exact_sup_abs_t() const;       // sup |f'/f|
  std::optional<Stat> exact_min_tangent_dist() const;  // inf f*cos(gamma)
  void scale_radii(double s);
};

namespace detail {

inline double arc_dot(const CircularArcPiece& p, double theta) {
  return p.center.dot(unit_dir(theta));
}

inline double arc_disc(const CircularArcPiece& p, double theta) {
  // algebraically g^2 + R^2 - |c|^2, but computed as R^2 minus the squared
  // distance from the center to the ray line; the direct sum cancels badly
  // when the center is far from the origin
  const double cr = p.center.cross(unit_dir(theta));
  return (p.radius - cr) * (p.radius + cr);
}

// Candidate angles k*step + offset falling inside [lo, hi].
inline void push_multiples(std::vector<double>& out, double offset, double step,
                           double lo, double hi) {
  const long k0 = static_cast<long>(std::floor((lo - offset) / step)) - 1;
  const long k1 = static_cast<long>(std::ceil((hi - offset) / step)) + 1;
  for (long k = k0; k <= k1; ++k) {
    const double a = offset + static_cast<double>(k) * step;
    if (a >= lo && a <= hi) out.push_back(a);
  }
}

}  // namespace detail

inline double BoundaryPiece::f(double theta) const {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SegmentPiece>) {
          const double c = std::cos(theta - p.foot_angle);
          if (c <= 0.0) throw StructureError("segment evaluated beyond its half-plane");
          return p.foot_distance / c;
        } else if constexpr (std::is_same_v<T, CircularArcPiece>) {
          const double g = detail::arc_dot(p, theta);
          const double disc = detail::arc_disc(p, theta);
          if (disc < 0.0) throw StructureError("ray misses circular arc");
          const double root = std::sqrt(disc);
          const double r = p.far_root ? g + root : g - root;
          if (r <= 0.0) throw StructureError("circular arc radius not positive");
          return r;
        } else if constexpr (std::is_same_v<T, LogSpiralPiece>) {
          return p.start_radius *
                 std::exp(p.direction * p.rate * (theta - p.ref_angle));
        } else {
          const double c = std::cos(theta), s = std::sin(theta);
          const double g = c * c / (p.semi_x * p.semi_x) + s * s / (p.semi_y * p.semi_y);
          return 1.0 / std::sqrt(g);
        }
      },
      shape);
}

inline double BoundaryPiece::fprime(double theta) const {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SegmentPiece>) {
          const double x = theta - p.foot_angle;
          const double c = std::cos(x);
          return p.foot_distance * std::sin(x) / (c * c);
        } else if constexpr (std::is_same_v<T, CircularArcPiece>) {
          const double g = detail::arc_dot(p, theta);
          const double disc = detail::arc_disc(p, theta);
          if (disc <= 0.0) throw StructureError("circular arc tangent ray");
          const double root = std::sqrt(disc);
          const double r = p.far_root ? g + root : g - root;
          // implicit differentiation of r^2 - 2 r (c.u) + |c|^2 - R^2 = 0;
          // r - g equals the signed root, which avoids re-cancelling
          const double gp = p.center.dot({-std::sin(theta), std::cos(theta)});
          return r * gp / (p.far_root ? root : -root);
        } else if constexpr (std::is_same_v<T, LogSpiralPiece>) {
          return p.direction * p.rate * f(theta);
        } else {
          const double c = std::cos(theta), s = std::sin(theta);
          const double ia2 = 1.0 / (p.semi_x * p.semi_x);
          const double ib2 = 1.0 / (p.semi_y * p.semi_y);
          const double g = c * c * ia2 + s * s * ib2;
          const double gp = 2.0 * s * c * (ib2 - ia2);
          const double fv = 1.0 / std::sqrt(g);
          return -0.5 * fv * fv * fv * gp;
        }
      },
      shape);
}

inline double BoundaryPiece::sup_f() const {
  std::vector<double> cand{theta_start, theta_end};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CircularArcPiece>) {
          if (p.center.norm() > 0.0)
            detail::push_multiples(cand, p.center.angle(), pi, theta_start, theta_end);
        } else if constexpr (std::is_same_v<T, EllipseArcPiece>) {
          detail::push_multiples(cand, 0.0, 0.5 * pi, theta_start, theta_end);
        }
      },
      shape);
  double m = 0.0;
  for (double a : cand) m = std::max(m, f(a));
  return m;
}

inline double BoundaryPiece::inf_f() const {
  std::vector<double> cand{theta_start, theta_end};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SegmentPiece>) {
          detail::push_multiples(cand, p.foot_angle, two_pi, theta_start, theta_end);
        } else if constexpr (std::is_same_v<T, CircularArcPiece>) {
          if (p.center.norm() > 0.0)
            detail::push_multiples(cand, p.center.angle(), pi, theta_start, theta_end);
        } else if constexpr (std::is_same_v<T, EllipseArcPiece>) {
          detail::push_multiples(cand, 0.0, 0.5 * pi, theta_start, theta_end);
        }
      },
      shape);
  double m = inf;
  for (double a : cand) m = std::min(m, f(a));
  return m;
}

inline std::optional<double> BoundaryPiece::exact_area() const {
  return std::visit(
      [&](const auto& p) -> std::optional<double> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SegmentPiece>) {
          const double d = p.foot_distance;
          return 0.5 * d * d *
                 (std::tan(theta_end - p.foot_angle) - std::tan(theta_start - p.foot_angle));
        } else if constexpr (std::is_same_v<T, LogSpiralPiece>) {
          const double r0 = p.start_radius;
          const double k = 2.0 * p.direction * p.rate;
          if (k == 0.0) return 0.5 * r0 * r0 * length();
          const double e0 = std::exp(k * (theta_start - p.ref_angle));
          const double e1 = std::exp(k * (theta_end - p.ref_angle));
          return r0 * r0 * (e1 - e0) / (2.0 * k);
        } else {
          return std::nullopt;
        }
      },
      shape);
}

inline std::optional<BoundaryPiece::Stat> BoundaryPiece::exact_sup_abs_t() const {
  using Stat = BoundaryPiece::Stat;
  const double mid = 0.5 * (theta_start + theta_end);
  return std::visit(
      [&](const auto& p) -> std::optional<Stat> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SegmentPiece>) {
          const double ts = std::fabs(std::tan(theta_start - p.foot_angle));
          const double te = std::fabs(std::tan(theta_end - p.foot_angle));
          return ts >= te ? Stat{ts, theta_start} : Stat{te, theta_end};
        } else if constexpr (std::is_same_v<T, LogSpiralPiece>) {
          return Stat{p.rate, mid};
        } else if constexpr (std::is_same_v<T, CircularArcPiece>) {
          if (p.center.norm() == 0.0) return Stat{0.0, mid};
          return std::nullopt;
        } else {
          const double a = p.semi_x, b = p.semi_y;
          if (a == b) return Stat{0.0, mid};
          // |t| peaks at cos(2 theta) = -(b^2-a^2)/(b^2+a^2), value |b^2-a^2|/(2ab);
          // usable only when a maximizer lies in the interval.
          const double peak = std::fabs(b * b - a * a) / (2.0 * a * b);
          const double v = std::acos(-(b * b - a * a) / (b * b + a * a));
          std::vector<double> cand;
          detail::push_multiples(cand, 0.5 * v, pi, theta_start, theta_end);
          detail::push_multiples(cand, -0.5 * v, pi, theta_start, theta_end);
          if (!cand.empty()) return Stat{peak, cand.front()};
          return std::nullopt;
        }
      },
      shape);
}

inline std::optional<BoundaryPiece::Stat> BoundaryPiece::exact_min_tangent_dist()
    const {
  using Stat = BoundaryPiece::Stat;
  const double mid = 0.5 * (theta_start + theta_end);
  return std::visit(
      [&](const auto& p) -> std::optional<Stat> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SegmentPiece>) {
          return Stat{p.foot_distance, mid};
        } else if constexpr (std::is_same_v<T, LogSpiralPiece>) {
          const double fs = f(theta_start), fe = f(theta_end);
          const double scale = std::sqrt(1.0 + p.rate * p.rate);
          return fs <= fe ? Stat{fs / scale, theta_start}
                          : Stat{fe / scale, theta_end};
        } else if constexpr (std::is_same_v<T, CircularArcPiece>) {
          if (p.center.norm() == 0.0) return Stat{p.radius, mid};
          return std::nullopt;
        } else {
          // tangent-line distance extrema sit at the axis angles
          std::vector<double> cand{theta_start, theta_end};
          detail::push_multiples(cand, 0.0, 0.5 * pi, theta_start, theta_end);
          Stat best{inf, mid};
          for (double ang : cand) {
            const double fv = f(ang), fp = fprime(ang);
            const double dist = fv * fv / std::hypot(fv, fp);
            if (dist < best.value) best = {dist, ang};
          }
          return best;
        }
      },
      shape);
}

inline void BoundaryPiece::scale_radii(double s) {
  std::visit(
      [&](auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SegmentPiece>) {
          p.foot_distance /= s;
        } else if constexpr (std::is_same_v<T, CircularArcPiece>) {
          p.center = p.center / s;
          p.radius /= s;
        } else if constexpr (std::is_same_v<T, LogSpiralPiece>) {
          p.start_radius /= s;
        } else {
          p.semi_x /= s;
          p.semi_y /= s;
        }
      },
      shape);
}

// ==== boundary ====

// One-sided radial derivative; the sides differ only at piece joints.
struct OneSidedDeriv {
  double left = 0.0;
  double right = 0.0;
  bool joint = false;
  double max_abs() const { return std::max(std::fabs(left), std::fabs(right)); }
};

class PolarBoundary {
 public:
  // Validates contiguity, positivity and joint continuity, then rescales all
  // radii so sup f = 1. The applied factor is kept in normalization_scale():
  // multiplying normalized radii by it recovers the input geometry.
  static PolarBoundary from_pieces(std::vector<BoundaryPiece> pieces) {
    if (pieces.empty()) throw StructureError("boundary needs at least one piece");
    std::sort(pieces.begin(), pieces.end(),
              [](const BoundaryPiece& a, const BoundaryPiece& b) {
                return a.theta_start < b.theta_start;
              });
    constexpr double kAngTol = 1e-9;
    double span = 0.0;
    for (const auto& p : pieces) {
      if (!(p.theta_end > p.theta_start))
        throw StructureError("piece interval is empty or reversed");
      span += p.length();
    }
    if (std::fabs(span - two_pi) > kAngTol)
      throw StructureError("piece intervals do not cover the full circle");
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      if (std::fabs(pieces[i].theta_end - pieces[i + 1].theta_start) > kAngTol)
        throw StructureError("piece intervals leave a gap or overlap");
      pieces[i + 1].theta_start = pieces[i].theta_end;  // snap exactly
    }
    const double base = pieces.front().theta_start;
    if (std::fabs(pieces.back().theta_end - (base + two_pi)) > kAngTol)
      throw StructureError("piece intervals do not close up");
    pieces.back().theta_end = base + two_pi;

    for (const auto& p : pieces) {
      const int n = 48;
      for (int i = 0; i <= n; ++i) {
        const double th = p.theta_start + p.length() * i / n;
        const double fv = p.f(th);  // throws StructureError on invalid geometry
        if (!(fv > 0.0) || !std::isfinite(fv))
          throw StructureError("boundary radius must be positive and finite");
      }
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto& a = pieces[i];
      const auto& b = pieces[(i + 1) % pieces.size()];
      // closing joint: a ends at base + 2*pi, b starts at base (same ray)
      const double fa = a.f(a.theta_end);
      const double fb = b.f(b.theta_start);
      if (std::fabs(fa - fb) > 1e-9 * std::max(1.0, std::fabs(fa)))
        throw StructureError("boundary is discontinuous at a piece joint");
    }

    double sup = 0.0;
    for (const auto& p : pieces) sup = std::max(sup, p.sup_f());
    if (!(sup > 0.0) || !std::isfinite(sup))
      throw StructureError("boundary has no finite positive radius");
    for (auto& p : pieces) p.scale_radii(sup);

    PolarBoundary b;
    b.pieces_ = std::move(pieces);
    b.base_ = base;
    b.scale_ = sup;
    return b;
  }

  const std::vector<BoundaryPiece>& pieces() const { return pieces_; }
  double normalization_scale() const { return scale_; }
  double base_angle() const { return base_; }

  // Joint angles (piece starts), ascending from base_angle().
  std::vector<double> joints() const {
    std::vector<double> j;
    j.reserve(pieces_.size());
    for (const auto& p : pieces_) j.push_back(p.theta_start);
    return j;
  }

  double f(double theta) const {
    const double th = wrap_into(theta, base_);
    return pieces_[find_piece(th)].f(th);
  }

  OneSidedDeriv fprime(double theta) const {
    const double th = wrap_into(theta, base_);
    const std::size_t i = find_piece(th);
    constexpr double kJointEps = 1e-12;
    OneSidedDeriv d;
    if (th - pieces_[i].theta_start <= kJointEps) {
      const std::size_t prev = (i + pieces_.size() - 1) % pieces_.size();
      d.left = pieces_[prev].fprime(pieces_[prev].theta_end);
      d.right = pieces_[i].fprime(pieces_[i].theta_start);
      d.joint = true;
    } else if (pieces_[i].theta_end - th <= kJointEps) {
      const std::size_t next = (i + 1) % pieces_.size();
      d.left = pieces_[i].fprime(pieces_[i].theta_end);
      d.right = pieces_[next].fprime(pieces_[next].theta_start);
      d.joint = true;
    } else {
      d.left = d.right = pieces_[i].fprime(th);
    }
    return d;
  }

  // arctan(|f'|/f); the larger one-sided value at joints.
  double gamma(double theta) const {
    const double fv = f(theta);
    return std::atan(fprime(theta).max_abs() / fv);
  }

 private:
  std::vector<BoundaryPiece> pieces_;
  double base_ = 0.0;
  double scale_ = 1.0;

  std::size_t find_piece(double th) const {
    std::size_t lo = 0, hi = pieces_.size();
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (pieces_[mid].theta_start <= th)
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }
};

// ==== sampling ====

// Per-piece samples of (theta, f, t = f'/f). Non-segment pieces carry
// ceil(grid_n * len / 2pi) uniform cells (at least 8); segments only their
// endpoints, where their extremal statistics live. Endpoint derivatives are
// one-sided, so joints contribute both limits via the adjacent pieces.
struct PieceSamples {
  std::size_t piece = 0;
  bool refinable = true;
  std::vector<double> theta, f, t;
};

inline std::vector<PieceSamples> sample_pieces(const PolarBoundary& b,
                                               const Options& opt = {}) {
  std::vector<PieceSamples> out;
  out.reserve(b.pieces().size());
  for (std::size_t i = 0; i < b.pieces().size(); ++i) {
    const auto& p = b.pieces()[i];
    PieceSamples ps;
    ps.piece = i;
    int n = 1;
    if (!p.is_segment()) {
      n = std::max(8, static_cast<int>(
                          std::ceil(opt.grid_n * p.length() / two_pi)));
    } else {
      ps.refinable = false;
    }
    ps.theta.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
      const double th = p.theta_start + p.length() * k / n;
      ps.theta.push_back(th);
      ps.f.push_back(p.f(th));
      ps.t.push_back(p.fprime(th) / ps.f.back());
    }
    out.push_back(std::move(ps));
  }
  return out;
}

struct Extremum {
  double value = 0.0;
  double theta = 0.0;
};

namespace detail {

// Maximize `g(piece, theta)` over the boundary via the sampled grid, then
// golden-refine the best `refine_cells` cells to opt.tol.
template <typename G>
Extremum maximize_over_boundary(const PolarBoundary& b,
                                const std::vector<PieceSamples>& samples, G&& g,
                                const Options& opt, int refine_cells = 3) {
  struct Hit {
    double value;
    std::size_t block, idx;
  };
  std::vector<Hit> top;
  Extremum best{-inf, b.base_angle()};
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& ps = samples[s];
    for (std::size_t k = 0; k < ps.theta.size(); ++k) {
      const double v = g(ps.piece, ps.theta[k], ps.f[k], ps.t[k]);
      if (v > best.value) best = {v, ps.theta[k]};
      if (!ps.refinable) continue;
      top.push_back({v, s, k});
      std::push_heap(top.begin(), top.end(),
                     [](const Hit& a, const Hit& b) { return a.value > b.value; });
      if (static_cast<int>(top.size()) > refine_cells) {
        std::pop_heap(top.begin(), top.end(),
                      [](const Hit& a, const Hit& b) { return a.value > b.value; });
        top.pop_back();
      }
    }
  }
  for (const auto& hit : top) {
    const auto& ps = samples[hit.block];
    const auto& piece = b.pieces()[ps.piece];
    const double lo = hit.idx > 0 ? ps.theta[hit.idx - 1] : piece.theta_start;
    const double hi = hit.idx + 1 < ps.theta.size() ? ps.theta[hit.idx + 1]
                                                    : piece.theta_end;
    if (!(hi > lo)) continue;
    auto neg = [&](double th) {
      const double fv = piece.f(th);
      return -g(ps.piece, th, fv, piece.fprime(th) / fv);
    };
    const auto r = golden_min(neg, lo, hi, opt.tol);
    if (-r.value > best.value) best = {-r.value, r.x};
  }
  return best;
}

}  // namespace detail

// ==== derived quantities ====

// Largest rho such that the domain is star-shaped with respect to every point
// of the disk |x| < rho (normalized units): inf over theta of f * cos(gamma).
inline Extremum rho_max(const PolarBoundary& b, const Options& opt = {}) {
  // pieces with an exact minimum contribute it directly and stay out of the
  // grid search, so grid noise can never shadow a closed form
  std::vector<bool> exact(b.pieces().size(), false);
  std::optional<Extremum> best;
  for (std::size_t i = 0; i < b.pieces().size(); ++i) {
    if (auto ex = b.pieces()[i].exact_min_tangent_dist()) {
      exact[i] = true;
      if (!best || ex->value < best->value) best = Extremum{ex->value, ex->theta};
    }
  }
  auto samples = sample_pieces(b, opt);
  std::erase_if(samples,
                [&](const PieceSamples& ps) { return exact[ps.piece]; });
  if (!samples.empty()) {
    auto neg_dist = [](std::size_t, double, double fv, double tv) {
      return -fv / std::sqrt(1.0 + tv * tv);
    };
    Extremum g = detail::maximize_over_boundary(b, samples, neg_dist, opt);
    g.value = -g.value;
    if (!best || g.value < best->value) best = g;
  }
  return *best;
}

// Normalized circumradius is 1 by construction; exposed for symmetry with
// rho_max. Input-unit value is normalization_scale().
inline double r_min(const PolarBoundary& b) {
  double sup = 0.0;
  for (const auto& p : b.pieces()) sup = std::max(sup, p.sup_f());
  return sup;
}

// sup over theta of |f'/f| (log-derivative magnitude), with its location.
inline Extremum sup_abs_t(const PolarBoundary& b, const Options& opt = {}) {
  std::vector<bool> exact(b.pieces().size(), false);
  std::optional<Extremum> best;
  for (std::size_t i = 0; i < b.pieces().size(); ++i) {
    if (auto ex = b.pieces()[i].exact_sup_abs_t()) {
      exact[i] = true;
      if (!best || ex->value > best->value) best = Extremum{ex->value, ex->theta};
    }
  }
  auto samples = sample_pieces(b, opt);
  std::erase_if(samples,
                [&](const PieceSamples& ps) { return exact[ps.piece]; });
  if (!samples.empty()) {
    auto abs_t = [](std::size_t, double, double, double tv) {
      return std::fabs(tv);
    };
    Extremum g = detail::maximize_over_boundary(b, samples, abs_t, opt);
    if (!best || g.value > best->value) best = g;
  }
  return *best;
}

// Largest slope gamma* = sup over theta of arctan(|f'|/f), with its location.
inline Extremum sup_gamma(const PolarBoundary& b, const Options& opt = {}) {
  Extremum m = sup_abs_t(b, opt);
  m.value = std::atan(m.value);
  return m;
}

// Horgan-Payne angle: omega = pi/2 - gamma*. Positive for every valid
// strictly star-shaped boundary; degenerate slopes raise StarShapeError.
inline double horgan_payne_angle(const PolarBoundary& b, const Options& opt = {}) {
  const Extremum g = sup_gamma(b, opt);
  const double omega = 0.5 * pi - g.value;
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw StarShapeError("boundary slope reaches pi/2; domain not strictly star-shaped",
                         g.theta);
  return omega;
}

// Enclosed area in input units (normalized integral times scale^2).
inline double area(const PolarBoundary& b, const Options& opt = {}) {
  double total = 0.0;
  for (const auto& p : b.pieces()) {
    if (auto ex = p.exact_area()) {
      total += *ex;
    } else {
      total += integrate([&](double th) { return 0.5 * p.f(th) * p.f(th); },
                         p.theta_start, p.theta_end, opt.tol);
    }
  }
  const double s = b.normalization_scale();
  return total * s * s;
}

// ==== polygons ====

struct PolygonSpec {
  std::vector<Vec2> vertices;  // simple polygon, either orientation
  Vec2 center{0.0, 0.0};       // must lie in the open kernel
};

// Vertex radii r[j] and side distances d[j] around the center (input units,
// side j runs from vertex j to vertex j+1 after reorienting counterclockwise).
struct PolygonSides {
  std::vector<double> r;
  std::vector<double> d;
};

namespace detail {

inline std::vector<Vec2> centered_ccw_vertices(const PolygonSpec& spec) {
  const std::size_t n = spec.vertices.size();
  if (n < 3) throw ArgumentError("polygon needs at least 3 vertices");
  std::vector<Vec2> v;
  v.reserve(n);
  for (const auto& p : spec.vertices) v.push_back(p - spec.center);
  double twice_area = 0.0;
  for (std::size_t j = 0; j < n; ++j) twice_area += v[j].cross(v[(j + 1) % n]);
  if (twice_area == 0.0) throw StructureError("degenerate polygon (zero area)");
  if (twice_area < 0.0) std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace detail

inline PolygonSides polygon_sides(const PolygonSpec& spec) {
  const auto v = detail::centered_ccw_vertices(spec);
  const std::size_t n = v.size();
  PolygonSides out;
  out.r.reserve(n);
  out.d.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec2 a = v[j], b = v[(j + 1) % n];
    const double len = (b - a).norm();
    if (len == 0.0) throw StructureError("polygon has a repeated vertex");
    const double s = a.cross(b);  // 2 * area of triangle (center, a, b)
    if (s <= 1e-12 * a.norm() * b.norm())
      throw StarShapeError("polygon center lies outside the kernel (side " +
                               std::to_string(j) + ")",
                           a.angle());
    out.r.push_back(a.norm());
    out.d.push_back(s / len);
  }
  return out;
}

// Normalized Segment-piece boundary around spec.center. Throws StarShapeError
// when the center misses the kernel, StructureError on degenerate input.
inline PolarBoundary polygon_to_boundary(const PolygonSpec& spec) {
  const auto v = detail::centered_ccw_vertices(spec);
  polygon_sides(spec);  // star-shapedness gate
  const std::size_t n = v.size();

  // rotate so the first vertex carries the smallest wrapped angle
  std::size_t first = 0;
  double best = wrap_angle(v[0].angle());
  for (std::size_t j = 1; j < n; ++j) {
    const double a = wrap_angle(v[j].angle());
    if (a < best) {
      best = a;
      first = j;
    }
  }

  std::vector<BoundaryPiece> pieces;
  pieces.reserve(n);
  double theta = best;
  double turned = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 a = v[(first + k) % n];
    const Vec2 b = v[(first + k + 1) % n];
    const Vec2 dir = b - a;
    const double dth = wrap_angle(b.angle() - a.angle());
    if (!(dth > 0.0) || dth >= pi)
      throw StarShapeError("polygon side subtends an invalid angle", a.angle());
    const double d = a.cross(b) / dir.norm();
    const double foot_raw = std::atan2(-dir.x, dir.y);
    BoundaryPiece piece;
    piece.theta_start = theta;
    piece.theta_end = theta + dth;
    piece.shape = SegmentPiece{d, nearest_rep(foot_raw, theta + 0.5 * dth)};
    pieces.push_back(piece);
    theta += dth;
    turned += dth;
  }
  if (std::fabs(turned - two_pi) > 1e-9)
    throw StarShapeError("polygon winds around the center more than once",
                         v[first].angle());
  pieces.back().theta_end = best + two_pi;
  return PolarBoundary::from_pieces(std::move(pieces));
}

}  // namespace infsup
