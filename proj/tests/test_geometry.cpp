#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "infsup/geometry.hpp"
#include "infsup/golden.hpp"
#include "infsup/quadrature.hpp"
#include "support/generators.hpp"

using namespace infsup;

namespace {

BoundaryPiece piece(PieceShape shape, double lo, double hi) {
  BoundaryPiece p;
  p.shape = shape;
  p.theta_start = lo;
  p.theta_end = hi;
  return p;
}

PolarBoundary circle_at(Vec2 center, double radius) {
  return PolarBoundary::from_pieces(
      {piece(CircularArcPiece{center, radius, true}, 0.0, two_pi)});
}

}  // namespace

TEST_CASE("angle helpers normalize and pick nearest representatives") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(two_pi) == Catch::Approx(0.0).margin(1e-15));
  CHECK(wrap_angle(-0.25) == Catch::Approx(two_pi - 0.25));
  CHECK(wrap_into(0.1, two_pi) == Catch::Approx(two_pi + 0.1));
  CHECK(wrap_into(two_pi + 0.1, 0.0) == Catch::Approx(0.1).margin(1e-12));
  CHECK(nearest_rep(0.1, two_pi) == Catch::Approx(two_pi + 0.1));
  CHECK(nearest_rep(6.0, 0.0) == Catch::Approx(6.0 - two_pi));
}

TEST_CASE("golden section finds interior minima to the requested tolerance") {
  auto r = golden_min([](double x) { return (x - 0.3125) * (x - 0.3125); },
                      0.0, 1.0, 1e-12);
  CHECK(r.x == Catch::Approx(0.3125).margin(1e-6));
  CHECK(r.value == Catch::Approx(0.0).margin(1e-12));
  CHECK_FALSE(r.at_lower);
  CHECK_FALSE(r.at_upper);

  auto lo = golden_min([](double x) { return x; }, 2.0, 5.0, 1e-10);
  CHECK(lo.at_lower);
  CHECK_FALSE(lo.at_upper);
  CHECK(lo.value == Catch::Approx(2.0).margin(1e-8));

  auto hi = golden_min([](double x) { return -x; }, 2.0, 5.0, 1e-10);
  CHECK(hi.at_upper);
  CHECK(hi.value == Catch::Approx(-5.0).margin(1e-8));
}

TEST_CASE("adaptive quadrature integrates smooth functions to tolerance") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, pi) ==
        Catch::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        Catch::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 3.0) ==
        Catch::Approx(1.0 - std::exp(-3.0)).epsilon(1e-12));
  CHECK(integrate([](double) { return 0.0; }, 0.0, 1.0) == 0.0);
}

TEST_CASE("segment piece matches the supporting line geometry") {
  const SegmentPiece seg{2.0, 0.5 * pi};  // line y = 2
  BoundaryPiece p = piece(seg, 0.25 * pi, 0.75 * pi);
  CHECK(p.f(0.5 * pi) == Catch::Approx(2.0));
  CHECK(p.f(0.25 * pi) == Catch::Approx(2.0 * std::sqrt(2.0)));
  // t = tan(theta - foot_angle)
  CHECK(p.t(0.5 * pi) == Catch::Approx(0.0).margin(1e-15));
  CHECK(p.t(0.25 * pi) == Catch::Approx(-1.0));
  CHECK(p.t(0.75 * pi) == Catch::Approx(1.0));
  // triangle with apex angle pi/2 at the origin, height 2: area d^2 * tan
  REQUIRE(p.exact_area());
  CHECK(*p.exact_area() == Catch::Approx(4.0).epsilon(1e-14));
  REQUIRE(p.exact_sup_abs_t());
  CHECK(p.exact_sup_abs_t()->value == Catch::Approx(1.0));
  REQUIRE(p.exact_min_tangent_dist());
  CHECK(p.exact_min_tangent_dist()->value == Catch::Approx(2.0));
  CHECK_THROWS_AS(p.f(1.5 * pi), StructureError);
}

TEST_CASE("circular arc pieces evaluate radius and derivative") {
  SECTION("centered circle is constant with zero slope") {
    BoundaryPiece p = piece(CircularArcPiece{{0.0, 0.0}, 3.0, true}, 0.0, two_pi);
    CHECK(p.f(1.234) == Catch::Approx(3.0));
    CHECK(p.fprime(1.234) == 0.0);
    REQUIRE(p.exact_sup_abs_t());
    CHECK(p.exact_sup_abs_t()->value == 0.0);
    REQUIRE(p.exact_min_tangent_dist());
    CHECK(p.exact_min_tangent_dist()->value == Catch::Approx(3.0));
  }
  SECTION("offset circle agrees with the law of cosines") {
    const Vec2 c{0.4, -0.2};
    BoundaryPiece p = piece(CircularArcPiece{c, 1.0, true}, 0.0, two_pi);
    for (double th : {0.0, 0.7, 2.0, 4.5}) {
      const double r = p.f(th);
      const Vec2 x = unit_dir(th) * r;
      CHECK((x - c).norm() == Catch::Approx(1.0).epsilon(1e-13));
    }
  }
  SECTION("derivative matches finite differences") {
    BoundaryPiece p = piece(CircularArcPiece{{0.3, 0.1}, 1.0, true}, 0.0, two_pi);
    for (double th : {0.3, 1.1, 2.9, 5.0}) {
      const double h = 1e-6;
      const double fd = (p.f(th + h) - p.f(th - h)) / (2.0 * h);
      CHECK(p.fprime(th) == Catch::Approx(fd).margin(1e-7));
    }
  }
  SECTION("far center keeps cancellation out of the discriminant") {
    // circle of radius 1 centered 1e4 away; radius along the center ray
    const double d = 1e4;
    BoundaryPiece p = piece(CircularArcPiece{{d, 0.0}, 1.0, true},
                            -1e-4, 1e-4);
    CHECK(p.f(0.0) == Catch::Approx(d + 1.0).epsilon(1e-12));
  }
}

TEST_CASE("log spiral piece has constant log-derivative") {
  BoundaryPiece p = piece(LogSpiralPiece{1.0, 2.0, -1, 0.0}, 0.0, 0.5 * pi);
  CHECK(p.f(0.0) == Catch::Approx(1.0));
  CHECK(p.f(0.5 * pi) == Catch::Approx(std::exp(-pi)).epsilon(1e-14));
  CHECK(p.t(0.3) == Catch::Approx(-2.0));
  REQUIRE(p.exact_sup_abs_t());
  CHECK(p.exact_sup_abs_t()->value == Catch::Approx(2.0));
  // area = r0^2 (1 - e^{2 k dir (hi-lo)}) / (-4 k dir) for dir=-1, k=2
  REQUIRE(p.exact_area());
  const double expected = (1.0 - std::exp(-2.0 * pi)) / 8.0;
  CHECK(*p.exact_area() == Catch::Approx(expected).epsilon(1e-13));
  const double quad = integrate(
      [&](double th) { return 0.5 * p.f(th) * p.f(th); }, 0.0, 0.5 * pi);
  CHECK(*p.exact_area() == Catch::Approx(quad).epsilon(1e-11));
  // min tangential distance: inf f / sqrt(1 + rate^2)
  REQUIRE(p.exact_min_tangent_dist());
  CHECK(p.exact_min_tangent_dist()->value ==
        Catch::Approx(std::exp(-pi) / std::sqrt(5.0)).epsilon(1e-13));
}

TEST_CASE("ellipse piece radius, derivative and exact slope maximum") {
  BoundaryPiece p = piece(EllipseArcPiece{1.0, 2.0}, 0.0, two_pi);
  CHECK(p.f(0.0) == Catch::Approx(1.0));
  CHECK(p.f(0.5 * pi) == Catch::Approx(2.0));
  for (double th : {0.2, 1.0, 2.2, 3.9, 5.7}) {
    const double h = 1e-6;
    const double fd = (p.f(th + h) - p.f(th - h)) / (2.0 * h);
    CHECK(p.fprime(th) == Catch::Approx(fd).margin(1e-7));
  }
  // sup |f'/f| = (b^2 - a^2) / (2 a b)
  REQUIRE(p.exact_sup_abs_t());
  CHECK(p.exact_sup_abs_t()->value == Catch::Approx(0.75).epsilon(1e-14));
  REQUIRE(p.exact_min_tangent_dist());
  CHECK(p.exact_min_tangent_dist()->value == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("boundary assembly validates coverage, joints and positivity") {
  SECTION("gap between pieces is rejected") {
    CHECK_THROWS_AS(
        PolarBoundary::from_pieces(
            {piece(CircularArcPiece{{0, 0}, 1.0, true}, 0.0, pi),
             piece(CircularArcPiece{{0, 0}, 1.0, true}, pi + 0.1, two_pi)}),
        StructureError);
  }
  SECTION("radius jump at a joint is rejected") {
    CHECK_THROWS_AS(
        PolarBoundary::from_pieces(
            {piece(CircularArcPiece{{0, 0}, 1.0, true}, 0.0, pi),
             piece(CircularArcPiece{{0, 0}, 2.0, true}, pi, two_pi)}),
        StructureError);
  }
  SECTION("reversed interval is rejected") {
    CHECK_THROWS_AS(PolarBoundary::from_pieces(
                        {piece(CircularArcPiece{{0, 0}, 1.0, true}, two_pi, 0.0)}),
                    StructureError);
  }
  SECTION("partial cover is rejected") {
    CHECK_THROWS_AS(PolarBoundary::from_pieces(
                        {piece(CircularArcPiece{{0, 0}, 1.0, true}, 0.0, pi)}),
                    StructureError);
  }
  SECTION("valid circle assembles and normalizes") {
    PolarBoundary b = circle_at({0.0, 0.0}, 7.0);
    CHECK(b.normalization_scale() == Catch::Approx(7.0));
    CHECK(b.f(1.0) == Catch::Approx(1.0));
  }
}

TEST_CASE("boundary evaluation wraps angles and handles joints one-sided") {
  PolygonSpec sq{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, {0, 0}};
  PolarBoundary b = polygon_to_boundary(sq);
  CHECK(b.normalization_scale() == Catch::Approx(std::sqrt(2.0)));
  // normalized: vertex radius 1, edge midpoint 1/sqrt(2)
  CHECK(b.f(0.0) == Catch::Approx(1.0 / std::sqrt(2.0)));
  CHECK(b.f(0.25 * pi) == Catch::Approx(1.0).epsilon(1e-13));
  CHECK(b.f(0.25 * pi + two_pi) == Catch::Approx(1.0).epsilon(1e-13));
  CHECK(b.f(-0.75 * pi) == Catch::Approx(1.0).epsilon(1e-13));
  const OneSidedDeriv d = b.fprime(0.25 * pi);
  CHECK(d.joint);
  CHECK(d.left == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(d.right == Catch::Approx(-1.0).epsilon(1e-12));
  const OneSidedDeriv mid = b.fprime(0.1);
  CHECK_FALSE(mid.joint);
  CHECK(mid.left == Catch::Approx(mid.right));
}

TEST_CASE("polygon side statistics and star-shape screening") {
  SECTION("unit square about its center") {
    PolygonSides s =
        polygon_sides(PolygonSpec{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, {0, 0}});
    REQUIRE(s.r.size() == 4);
    for (double r : s.r) CHECK(r == Catch::Approx(std::sqrt(2.0)));
    for (double d : s.d) CHECK(d == Catch::Approx(1.0));
  }
  SECTION("center outside the kernel is rejected with the side named") {
    PolygonSpec bad{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {2.0, 0.0}};
    CHECK_THROWS_AS(polygon_sides(bad), StarShapeError);
  }
  SECTION("clockwise input yields the same statistics as counterclockwise") {
    PolygonSpec cw{{{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}, {0, 0}};
    PolygonSides s = polygon_sides(cw);
    REQUIRE(s.d.size() == 4);
    for (double d : s.d) CHECK(d == Catch::Approx(1.0));
  }
  SECTION("off-center statistics use distances from the chosen center") {
    PolygonSides s = polygon_sides(
        PolygonSpec{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, {0.5, 0.0}});
    // right side is now at distance 0.5, left side at 1.5
    double dmin = 1e9, dmax = 0.0;
    for (double d : s.d) {
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
    CHECK(dmin == Catch::Approx(0.5));
    CHECK(dmax == Catch::Approx(1.5));
  }
}

TEST_CASE("polygon boundaries close up for random star polygons") {
  auto g = testgen::engine(61);
  for (int it = 0; it < 100; ++it) {
    const PolygonSpec poly = testgen::random_star_polygon(g, 3, 12, 0.3, 1.0);
    const PolarBoundary b = polygon_to_boundary(poly);
    CHECK(b.pieces().size() == poly.vertices.size());
    // every vertex must lie on the boundary at its own angle
    for (const Vec2& v : poly.vertices) {
      const Vec2 rel = v - poly.center;
      const double th = rel.angle();
      CHECK(b.f(th) * b.normalization_scale() ==
            Catch::Approx(rel.norm()).epsilon(1e-10));
    }
  }
}

TEST_CASE("area matches closed forms and quadrature") {
  CHECK(area(circle_at({0, 0}, 2.0)) == Catch::Approx(4.0 * pi).epsilon(1e-10));
  PolarBoundary sq = polygon_to_boundary(
      PolygonSpec{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, {0, 0}});
  CHECK(area(sq) == Catch::Approx(4.0).epsilon(1e-12));
  PolarBoundary ell =
      PolarBoundary::from_pieces({piece(EllipseArcPiece{1.0, 2.0}, 0.0, two_pi)});
  CHECK(area(ell) == Catch::Approx(2.0 * pi).epsilon(1e-9));
  // area is invariant under the choice of star center
  PolarBoundary off = circle_at({0.4, -0.3}, 1.0);
  CHECK(area(off) == Catch::Approx(pi).epsilon(1e-9));
}

TEST_CASE("extremal scans find radii and slopes of reference shapes") {
  SECTION("square") {
    PolarBoundary b = polygon_to_boundary(
        PolygonSpec{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, {0, 0}});
    CHECK(rho_max(b).value == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r_min(b) == Catch::Approx(1.0));
    CHECK(sup_abs_t(b).value == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(horgan_payne_angle(b) == Catch::Approx(0.25 * pi).epsilon(1e-12));
  }
  SECTION("offset circle") {
    PolarBoundary b = circle_at({0.4, 0.0}, 1.0);
    // min tangent distance (R - |c|) over normalization scale (R + |c|)
    CHECK(rho_max(b).value == Catch::Approx(0.6 / 1.4).epsilon(1e-9));
    // slope maximum of an offset circle: sin(gamma*) = |c| / R
    const double expect = 0.4 / std::sqrt(1.0 - 0.16);
    CHECK(sup_abs_t(b).value == Catch::Approx(expect).epsilon(1e-9));
  }
  SECTION("ellipse slope maximum uses the closed form") {
    PolarBoundary b = PolarBoundary::from_pieces(
        {piece(EllipseArcPiece{1.0, 2.0}, 0.0, two_pi)});
    CHECK(sup_abs_t(b).value == Catch::Approx(0.75).epsilon(1e-14));
    CHECK(rho_max(b).value == Catch::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("one-sided slopes at polygon vertices bound the interior values") {
  auto g = testgen::engine(62);
  for (int it = 0; it < 50; ++it) {
    const PolygonSpec poly = testgen::random_star_polygon(g, 4, 9, 0.4, 1.0);
    const PolarBoundary b = polygon_to_boundary(poly);
    const double sup = sup_abs_t(b).value;
    for (const auto& p : b.pieces()) {
      for (double u : {0.1, 0.5, 0.9}) {
        const double th = p.theta_start + u * p.length();
        CHECK(std::fabs(p.t(th)) <= sup * (1.0 + 1e-12));
      }
    }
  }
}
