#pragma once

// Catalog of built-in domains: reference shapes with known constants and the
// three families on which the claimed Horgan-Payne lower bound fails. Builders
// produce normalized PolarBoundary instances around the documented center;
// cut data for the counterexample families comes in closed form.

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "infsup/bounds.hpp"
#include "infsup/cutbound.hpp"
#include "infsup/geometry.hpp"

namespace infsup {

// ==== shape specs ====

struct DiskSpec {
  double radius = 1.0;
  Vec2 star_center{0.0, 0.0};  // polar origin, must lie inside the disk
};

struct EllipseSpec {
  double a = 1.0;  // semi-axis along x, a <= b
  double b = 1.0;  // semi-axis along y
};

struct RegularPolygonSpec {
  int sides = 3;
  double circumradius = 1.0;
  std::optional<Vec2> star_center;  // default: the center
};

struct RectangleSpec {
  double width = 1.0;
  double height = 1.0;
  std::optional<Vec2> star_center;  // default: the center
};

enum class TriangleCenter { Barycenter, Incenter };

struct TriangleSpec {
  Vec2 p1, p2, p3;
  TriangleCenter center_rule = TriangleCenter::Barycenter;
  std::optional<Vec2> star_center;  // overrides center_rule when set
};

struct RhombusSpec {
  double diag_x = 1.0;  // full diagonal along x
  double diag_y = 1.0;  // full diagonal along y
  std::optional<Vec2> star_center;  // default: the center (= incenter)
};

struct GeneralPolygonSpec {
  std::vector<Vec2> vertices;
  Vec2 star_center{0.0, 0.0};
};

// Four logarithmic-spiral pieces pinched on the vertical axis; the claimed
// bound fails for rate c beyond roughly 2.57.
struct CupidsBowSpec {
  double c = 1.0;
};

// Two mirrored stadia joined through a passage of half-width eps on the
// vertical axis; the claimed bound fails for small eps.
struct DoubleStadiumSpec {
  double eps = 0.1;
};

// Star-like octagon with vertex radii 1, q, q^2 by angle; the claimed bound
// fails for small q.
struct OctagonSpec {
  double q = 0.25;
};

using ShapeSpec =
    std::variant<DiskSpec, EllipseSpec, RegularPolygonSpec, RectangleSpec,
                 TriangleSpec, RhombusSpec, GeneralPolygonSpec, CupidsBowSpec,
                 DoubleStadiumSpec, OctagonSpec>;

inline std::string kind_name(const ShapeSpec& spec) {
  struct V {
    std::string operator()(const DiskSpec&) const { return "disk"; }
    std::string operator()(const EllipseSpec&) const { return "ellipse"; }
    std::string operator()(const RegularPolygonSpec&) const {
      return "regular_polygon";
    }
    std::string operator()(const RectangleSpec&) const { return "rectangle"; }
    std::string operator()(const TriangleSpec&) const { return "triangle"; }
    std::string operator()(const RhombusSpec&) const { return "rhombus"; }
    std::string operator()(const GeneralPolygonSpec&) const { return "polygon"; }
    std::string operator()(const CupidsBowSpec&) const { return "cupids_bow"; }
    std::string operator()(const DoubleStadiumSpec&) const {
      return "double_stadium";
    }
    std::string operator()(const OctagonSpec&) const { return "octagon"; }
  };
  return std::visit(V{}, spec);
}

// ==== builders ====

namespace detail {

inline PolarBoundary build_disk(const DiskSpec& s) {
  if (!(s.radius > 0.0)) throw ArgumentError("disk: radius must be positive");
  if (s.star_center.norm() >= s.radius)
    throw StarShapeError("disk: chosen center lies outside the disk",
                         s.star_center.angle());
  BoundaryPiece p;
  p.shape = CircularArcPiece{Vec2{0.0, 0.0} - s.star_center, s.radius, true};
  p.theta_start = 0.0;
  p.theta_end = two_pi;
  return PolarBoundary::from_pieces({p});
}

inline PolarBoundary build_ellipse(const EllipseSpec& s) {
  if (!(s.a > 0.0) || !(s.b > 0.0))
    throw ArgumentError("ellipse: semi-axes must be positive");
  if (s.a > s.b)
    throw ArgumentError("ellipse: expected a <= b (minor axis along x)");
  BoundaryPiece p;
  p.shape = EllipseArcPiece{s.a, s.b};
  p.theta_start = 0.0;
  p.theta_end = two_pi;
  return PolarBoundary::from_pieces({p});
}

inline PolarBoundary build_regular_polygon(const RegularPolygonSpec& s) {
  if (s.sides < 3) throw ArgumentError("regular polygon: need at least 3 sides");
  if (!(s.circumradius > 0.0))
    throw ArgumentError("regular polygon: circumradius must be positive");
  PolygonSpec poly;
  poly.vertices.reserve(s.sides);
  for (int k = 0; k < s.sides; ++k)
    poly.vertices.push_back(unit_dir(two_pi * k / s.sides) * s.circumradius);
  poly.center = s.star_center.value_or(Vec2{0.0, 0.0});
  return polygon_to_boundary(poly);
}

inline PolarBoundary build_rectangle(const RectangleSpec& s) {
  if (!(s.width > 0.0) || !(s.height > 0.0))
    throw ArgumentError("rectangle: sides must be positive");
  const double w = 0.5 * s.width, h = 0.5 * s.height;
  PolygonSpec poly;
  poly.vertices = {{w, h}, {-w, h}, {-w, -h}, {w, -h}};
  poly.center = s.star_center.value_or(Vec2{0.0, 0.0});
  return polygon_to_boundary(poly);
}

inline Vec2 triangle_center(const TriangleSpec& s) {
  if (s.star_center) return *s.star_center;
  if (s.center_rule == TriangleCenter::Barycenter)
    return (s.p1 + s.p2 + s.p3) / 3.0;
  const double a = (s.p2 - s.p3).norm();
  const double b = (s.p3 - s.p1).norm();
  const double c = (s.p1 - s.p2).norm();
  return (s.p1 * a + s.p2 * b + s.p3 * c) / (a + b + c);
}

inline PolarBoundary build_triangle(const TriangleSpec& s) {
  PolygonSpec poly;
  poly.vertices = {s.p1, s.p2, s.p3};
  poly.center = triangle_center(s);
  return polygon_to_boundary(poly);
}

inline PolarBoundary build_rhombus(const RhombusSpec& s) {
  if (!(s.diag_x > 0.0) || !(s.diag_y > 0.0))
    throw ArgumentError("rhombus: diagonals must be positive");
  PolygonSpec poly;
  poly.vertices = {{0.5 * s.diag_x, 0.0},
                   {0.0, 0.5 * s.diag_y},
                   {-0.5 * s.diag_x, 0.0},
                   {0.0, -0.5 * s.diag_y}};
  poly.center = s.star_center.value_or(Vec2{0.0, 0.0});
  return polygon_to_boundary(poly);
}

inline PolarBoundary build_cupids_bow(const CupidsBowSpec& s) {
  if (!(s.c > 0.0)) throw ArgumentError("cupids bow: rate must be positive");
  const double c = s.c;
  const double waist = std::exp(-0.5 * c * pi);
  std::vector<BoundaryPiece> pieces(4);
  pieces[0].shape = LogSpiralPiece{1.0, c, -1, 0.0};
  pieces[0].theta_start = 0.0;
  pieces[0].theta_end = 0.5 * pi;
  pieces[1].shape = LogSpiralPiece{waist, c, +1, 0.5 * pi};
  pieces[1].theta_start = 0.5 * pi;
  pieces[1].theta_end = pi;
  pieces[2].shape = LogSpiralPiece{1.0, c, -1, pi};
  pieces[2].theta_start = pi;
  pieces[2].theta_end = 1.5 * pi;
  pieces[3].shape = LogSpiralPiece{waist, c, +1, 1.5 * pi};
  pieces[3].theta_start = 1.5 * pi;
  pieces[3].theta_end = two_pi;
  return PolarBoundary::from_pieces(std::move(pieces));
}

inline PolarBoundary build_double_stadium(const DoubleStadiumSpec& s) {
  if (!(s.eps > 0.0) || !(s.eps < 1.0))
    throw ArgumentError("double stadium: eps must lie in (0, 1)");
  const double a = std::sqrt(1.0 - s.eps * s.eps);  // inner circle abscissa
  const double b = a / s.eps;                       // outer circle abscissa
  const double t1 = std::atan2(1.0, b);  // outer arc meets the tangent line
  const double t2 = std::atan2(1.0, a);  // tangent line meets the inner arc
  const CircularArcPiece inner_r{{a, 0.0}, 1.0, true};
  const CircularArcPiece inner_l{{-a, 0.0}, 1.0, true};
  const CircularArcPiece outer_r{{b, 0.0}, 1.0, true};
  const CircularArcPiece outer_l{{-b, 0.0}, 1.0, true};
  const SegmentPiece top{1.0, 0.5 * pi};
  const SegmentPiece bottom{1.0, 1.5 * pi};
  std::vector<BoundaryPiece> pieces;
  auto add = [&](PieceShape shape, double lo, double hi) {
    BoundaryPiece p;
    p.shape = shape;
    p.theta_start = lo;
    p.theta_end = hi;
    pieces.push_back(p);
  };
  add(top, t1, t2);
  add(inner_r, t2, 0.5 * pi);
  add(inner_l, 0.5 * pi, pi - t2);
  add(top, pi - t2, pi - t1);
  add(outer_l, pi - t1, pi + t1);
  add(bottom, pi + t1, pi + t2);
  add(inner_l, pi + t2, 1.5 * pi);
  add(inner_r, 1.5 * pi, two_pi - t2);
  add(bottom, two_pi - t2, two_pi - t1);
  add(outer_r, two_pi - t1, two_pi + t1);  // wraps through angle zero
  return PolarBoundary::from_pieces(std::move(pieces));
}

inline PolarBoundary build_octagon(const OctagonSpec& s) {
  if (!(s.q > 0.0) || s.q > 1.0)
    throw ArgumentError("octagon: q must lie in (0, 1]");
  const double radii[8] = {1.0, s.q, s.q * s.q, s.q,
                           1.0, s.q, s.q * s.q, s.q};
  PolygonSpec poly;
  for (int k = 0; k < 8; ++k)
    poly.vertices.push_back(unit_dir(0.25 * pi * k) * radii[k]);
  poly.center = {0.0, 0.0};
  return polygon_to_boundary(poly);
}

}  // namespace detail

inline PolarBoundary build(const ShapeSpec& spec) {
  return std::visit(
      [](const auto& s) -> PolarBoundary {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DiskSpec>) return detail::build_disk(s);
        else if constexpr (std::is_same_v<T, EllipseSpec>) return detail::build_ellipse(s);
        else if constexpr (std::is_same_v<T, RegularPolygonSpec>) return detail::build_regular_polygon(s);
        else if constexpr (std::is_same_v<T, RectangleSpec>) return detail::build_rectangle(s);
        else if constexpr (std::is_same_v<T, TriangleSpec>) return detail::build_triangle(s);
        else if constexpr (std::is_same_v<T, RhombusSpec>) return detail::build_rhombus(s);
        else if constexpr (std::is_same_v<T, GeneralPolygonSpec>) return polygon_to_boundary({s.vertices, s.star_center});
        else if constexpr (std::is_same_v<T, CupidsBowSpec>) return detail::build_cupids_bow(s);
        else if constexpr (std::is_same_v<T, DoubleStadiumSpec>) return detail::build_double_stadium(s);
        else return detail::build_octagon(s);
      },
      spec);
}

// ==== reference constants ====

struct ReferenceConstants {
  std::optional<double> gamma_exact;  // Friedrichs constant, exact
  std::optional<double> beta_exact;
  std::optional<double> c_lower;          // proven lower bound for C
  std::optional<double> c_conjectured;    // historic conjecture, kept as data
};

// Known exact constants / reference bounds for some shapes. Disks: Gamma = 1.
// Ellipses: Gamma = (b/a)^2. Squares: the spectral lower bound
// C >= (1/2 - 1/pi)^{-1} and the superseded conjecture C = 7/2.
inline std::optional<ReferenceConstants> reference_constants(const ShapeSpec& spec) {
  ReferenceConstants rc;
  if (const auto* d = std::get_if<DiskSpec>(&spec); d) {
    rc.gamma_exact = 1.0;
    rc.beta_exact = 1.0 / std::sqrt(2.0);
    return rc;
  }
  if (const auto* e = std::get_if<EllipseSpec>(&spec); e) {
    const double g = (e->b / e->a) * (e->b / e->a);
    rc.gamma_exact = g;
    rc.beta_exact = 1.0 / std::sqrt(1.0 + g);
    return rc;
  }
  const bool square_rect = [&] {
    const auto* r = std::get_if<RectangleSpec>(&spec);
    return r && r->width == r->height;
  }();
  const bool square_reg = [&] {
    const auto* r = std::get_if<RegularPolygonSpec>(&spec);
    return r && r->sides == 4;
  }();
  if (square_rect || square_reg) {
    rc.c_lower = 1.0 / (0.5 - 1.0 / pi);
    rc.c_conjectured = 3.5;
    return rc;
  }
  return std::nullopt;
}

// ==== counterexample families ====

enum class Family { CupidsBow, DoubleStadium, Octagon };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::CupidsBow: return "cupid";
    case Family::DoubleStadium: return "stadium";
    case Family::Octagon: return "octagon";
  }
  return "?";
}

inline std::optional<Family> family_from_name(const std::string& name) {
  if (name == "cupid" || name == "cupids_bow" || name == "bow")
    return Family::CupidsBow;
  if (name == "stadium" || name == "double_stadium")
    return Family::DoubleStadium;
  if (name == "octagon") return Family::Octagon;
  return std::nullopt;
}

inline ShapeSpec make_family(Family f, double parameter) {
  switch (f) {
    case Family::CupidsBow: return CupidsBowSpec{parameter};
    case Family::DoubleStadium: return DoubleStadiumSpec{parameter};
    case Family::Octagon: return OctagonSpec{parameter};
  }
  throw ArgumentError("unknown counterexample family");
}

inline std::optional<std::pair<Family, double>> as_family(const ShapeSpec& spec) {
  if (const auto* c = std::get_if<CupidsBowSpec>(&spec); c)
    return std::pair{Family::CupidsBow, c->c};
  if (const auto* d = std::get_if<DoubleStadiumSpec>(&spec); d)
    return std::pair{Family::DoubleStadium, d->eps};
  if (const auto* o = std::get_if<OctagonSpec>(&spec); o)
    return std::pair{Family::Octagon, o->q};
  return std::nullopt;
}

// Closed-form cut data (input units) for the three families: both halves and
// the passage width across the vertical symmetry axis.
inline CutSpec counterexample_cut(const ShapeSpec& spec) {
  const auto fam = as_family(spec);
  if (!fam) throw ArgumentError("cut data only exists for counterexample families");
  switch (fam->first) {
    case Family::CupidsBow: {
      const double c = fam->second;
      if (!(c > 0.0)) throw ArgumentError("cupids bow: rate must be positive");
      const double E = std::exp(-c * pi);
      const double half = (1.0 - E) / (2.0 * c);
      return CutSpec::plane(half, half, 2.0 * std::exp(-0.5 * c * pi));
    }
    case Family::DoubleStadium: {
      const double eps = fam->second;
      if (!(eps > 0.0) || !(eps < 1.0))
        throw ArgumentError("double stadium: eps must lie in (0, 1)");
      const double half =
          2.0 * std::sqrt(1.0 - eps * eps) * (1.0 / eps - 1.0) + pi;
      return CutSpec::plane(half, half, 2.0 * eps);
    }
    case Family::Octagon: {
      const double q = fam->second;
      if (!(q > 0.0) || q > 1.0)
        throw ArgumentError("octagon: q must lie in (0, 1]");
      const double half = q * (1.0 + q * q) / std::sqrt(2.0);
      return CutSpec::plane(half, half, 2.0 * q * q);
    }
  }
  throw ArgumentError("unknown counterexample family");
}

// Vertical cut through the star center for an arbitrary boundary, by
// quadrature of the two half-areas (input units).
inline CutSpec vertical_cut(const PolarBoundary& b, const Options& opt = {}) {
  double plus = 0.0, minus = 0.0;
  for (const auto& p : b.pieces()) {
    // windows where cos(theta) > 0, intersected with the piece interval
    const long k0 = static_cast<long>(std::floor(p.theta_start / two_pi)) - 1;
    const long k1 = static_cast<long>(std::ceil(p.theta_end / two_pi)) + 1;
    double covered = 0.0;
    for (long k = k0; k <= k1; ++k) {
      const double lo = std::max(p.theta_start, -0.5 * pi + two_pi * k);
      const double hi = std::min(p.theta_end, 0.5 * pi + two_pi * k);
      if (hi > lo) {
        plus += integrate([&](double th) { return 0.5 * p.f(th) * p.f(th); },
                          lo, hi, opt.tol);
        covered += hi - lo;
      }
    }
    if (covered < p.length()) {
      // remainder lies in the half plane x < 0
      double neg_area = 0.0;
      for (long k = k0; k <= k1; ++k) {
        const double lo = std::max(p.theta_start, 0.5 * pi + two_pi * k);
        const double hi = std::min(p.theta_end, 1.5 * pi + two_pi * k);
        if (hi > lo)
          neg_area += integrate(
              [&](double th) { return 0.5 * p.f(th) * p.f(th); }, lo, hi,
              opt.tol);
      }
      minus += neg_area;
    }
  }
  const double s = b.normalization_scale();
  const double width = (b.f(0.5 * pi) + b.f(1.5 * pi)) * s;
  return CutSpec::plane(plus * s * s, minus * s * s, width);
}

// Full report for a catalog shape; counterexample families additionally get
// the proven upper bound from their closed-form cut.
inline BoundReport compute_report_for(const ShapeSpec& spec,
                                      const Options& opt = {}) {
  const PolarBoundary b = build(spec);
  BoundReport rep = compute_report(b, opt);
  if (as_family(spec)) {
    rep.beta_upper = beta_upper(counterexample_cut(spec));
    rep.provenance.emplace_back("beta_upper", "proven");
  }
  return rep;
}

// ==== refutation ====

struct RefutationReport {
  Family family = Family::CupidsBow;
  double parameter = 0.0;
  double omega = 0.0;                  // Horgan-Payne angle of the boundary
  double claimed_beta_sq = 0.0;        // sin^2(omega/2)
  double proven_beta_sq_upper = 0.0;   // squared cut bound
  double margin = 0.0;                 // claimed - proven; positive refutes
  bool refuted = false;
};

inline RefutationReport hp_refutation_report(Family family, double parameter,
                                             const Options& opt = {}) {
  const ShapeSpec spec = make_family(family, parameter);
  const PolarBoundary b = build(spec);
  const HPLower hp = hp_lower_bound(b, opt);
  const double upper = beta_upper(counterexample_cut(spec));
  RefutationReport rep;
  rep.family = family;
  rep.parameter = parameter;
  rep.omega = hp.omega;
  rep.claimed_beta_sq = hp.beta_sq;
  rep.proven_beta_sq_upper = upper * upper;
  rep.margin = refutation_margin(rep.claimed_beta_sq, rep.proven_beta_sq_upper);
  rep.refuted = rep.margin > 0.0;
  return rep;
}

struct Threshold {
  Family family = Family::CupidsBow;
  double value = 0.0;
  // true: refuted for parameters above the threshold (bow); false: refuted
  // below it (stadium, octagon).
  bool refutes_above = true;
};

// Bisect the sign change of the refutation margin to 3 significant digits.
inline Threshold refutation_threshold(Family family, const Options& opt = {}) {
  const bool above = family == Family::CupidsBow;
  double lo = above ? 0.5 : 1e-4;
  double hi = above ? 8.0 : 0.9;
  auto refuted = [&](double p) {
    return hp_refutation_report(family, p, opt).refuted;
  };
  bool at_lo = refuted(lo);
  if (at_lo == refuted(hi))
    throw NumericError("refutation threshold: no sign change in bracket");
  while (hi - lo > 5e-4 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (refuted(mid) == at_lo)
      lo = mid;
    else
      hi = mid;
  }
  // report from the refuting side of the bracket
  const double value = at_lo ? lo : hi;
  return Threshold{family, value, above};
}

}  // namespace infsup
