#include <gtest/gtest.h>

#include <cmath>

#include "planicheck/geometry.hpp"
#include "planicheck/random.hpp"

namespace planicheck {
namespace {

Point q(long x, long y) { return Point::exact(x, y); }
Point r(double x, double y) { return Point::real(x, y); }

TEST(AngleCos, RightAngle) {
  EXPECT_EQ(angle_cos(q(0, 0), q(1, 0), q(0, 1)).key().raw_sign(), 0);
  EXPECT_NEAR(angle_cos(r(0, 0), r(1, 0), r(0, 1)).cos(), 0.0, 1e-15);
}

TEST(AngleCos, FortyFiveDegrees) {
  EXPECT_NEAR(angle_cos(r(0, 0), r(1, 0), r(1, 1)).cos(), 0.70710678118654752, 1e-15);
  // signed square of cos 45 is 1/2
  const AngleCos e = angle_cos(q(0, 0), q(1, 0), q(1, 1));
  EXPECT_TRUE(e.is_signed_square());
  EXPECT_EQ(e.key().rational(), mpq_class(1, 2));
  EXPECT_FALSE(e.exact_cos().has_value());
  EXPECT_NEAR(e.degrees(), 45.0, 1e-12);
}

TEST(AngleCos, ThreeFifths) {
  // dot = 6, |u||v| = 2 * 5
  const AngleCos e = angle_cos(q(0, 0), q(2, 0), q(3, 4));
  ASSERT_TRUE(e.exact_cos().has_value());
  EXPECT_EQ(*e.exact_cos(), mpq_class(3, 5));
  EXPECT_NEAR(angle_cos(r(0, 0), r(2, 0), r(3, 4)).cos(), 0.6, 1e-15);
}

TEST(AngleCos, CoincidentRayEndIsDegenerate) {
  EXPECT_THROW(angle_cos(q(1, 1), q(1, 1), q(2, 3)), GeometryError);
  EXPECT_THROW(angle_cos(r(0, 0), r(1, 0), r(0, 0)), GeometryError);
}

TEST(AngleCos, ObtuseAnglesKeepTheirSign) {
  const AngleCos e = angle_cos(q(0, 0), q(1, 0), q(-1, 1));
  EXPECT_EQ(e.key().rational(), mpq_class(-1, 2));
  EXPECT_NEAR(e.degrees(), 135.0, 1e-12);
  EXPECT_TRUE(e.supplement().equals(angle_cos(q(0, 0), q(1, 0), q(1, 1))));
}

TEST(Supplementary, CosinePairs) {
  EXPECT_TRUE(supplementary(Scalar::real(0.5), Scalar::real(-0.5)));
  EXPECT_TRUE(supplementary(Scalar::real(0.0), Scalar::real(0.0)));
  EXPECT_FALSE(supplementary(Scalar::real(0.5), Scalar::real(-0.4)));
  EXPECT_TRUE(supplementary(Scalar::exact(1, 2), Scalar::exact(-1, 2)));
  EXPECT_FALSE(supplementary(Scalar::exact(1, 2), Scalar::exact(-1, 3)));
}

TEST(Circumcircle, RightIsoscelesCorner) {
  const Circle c = circumcircle(Triangle(q(0, 0), q(2, 0), q(0, 2)));
  EXPECT_EQ(c.center.x.rational(), 1);
  EXPECT_EQ(c.center.y.rational(), 1);
  EXPECT_EQ(c.radius_sq.rational(), 2);
}

TEST(Circumcircle, EquilateralCenterIsCentroid) {
  const double h = std::sqrt(3.0) / 2;
  const Circle c = circumcircle(Triangle(r(0, 0), r(1, 0), r(0.5, h)));
  EXPECT_NEAR(c.center.x.to_double(), 0.5, 1e-15);
  EXPECT_NEAR(c.center.y.to_double(), std::sqrt(3.0) / 6, 1e-15);
}

TEST(Circumcircle, CollinearInputIsRejected) {
  EXPECT_THROW(Triangle(q(0, 0), q(1, 0), q(2, 0)), GeometryError);
  EXPECT_FALSE(Triangle::make(r(0, 0), r(1, 0), r(2, 0)).has_value());
}

TEST(Circumcircle, CenterIsEquidistantOnRandomRationalTriangles) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto t = Triangle::make(q(rng.integer(-20, 20), rng.integer(-20, 20)),
                            q(rng.integer(-20, 20), rng.integer(-20, 20)),
                            q(rng.integer(-20, 20), rng.integer(-20, 20)));
    if (!t) continue;
    const Circle c = circumcircle(*t);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(squared_distance(c.center, (*t)[k]).rational(), c.radius_sq.rational());
  }
}

TEST(Bisectors, ThreeFourFiveIncenter) {
  const BisectorFeet f = incenter_and_bisector_feet(Triangle(q(0, 0), q(4, 0), q(0, 3)));
  EXPECT_EQ(f.incenter.x.rational(), 1);
  EXPECT_EQ(f.incenter.y.rational(), 1);
}

TEST(Bisectors, FootDividesOppositeSideInRatioOfAdjacentSides) {
  // A = (0,0), B = (4,0), C = (0,3): AB = 4, AC = 3, so BA1 : A1C = 4 : 3
  const BisectorFeet f = incenter_and_bisector_feet(Triangle(q(0, 0), q(4, 0), q(0, 3)));
  EXPECT_EQ(f.foot_a.x.rational(), mpq_class(12, 7));
  EXPECT_EQ(f.foot_a.y.rational(), mpq_class(12, 7));
  // the right angle at A is bisected by y = x
  EXPECT_EQ(f.foot_a.x.rational(), f.foot_a.y.rational());
}

TEST(Bisectors, EquilateralIncenterIsCentroid) {
  const double h = std::sqrt(3.0) / 2;
  const BisectorFeet f = incenter_and_bisector_feet(Triangle(r(0, 0), r(1, 0), r(0.5, h)));
  EXPECT_NEAR(f.incenter.x.to_double(), 0.5, 1e-15);
  EXPECT_NEAR(f.incenter.y.to_double(), h / 3, 1e-15);
}

TEST(Bisectors, IncenterDistanceMatchesAreaOverSemiperimeter) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double xs[6] = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5),
                          rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    auto t = Triangle::make(r(xs[0], xs[1]), r(xs[2], xs[3]), r(xs[4], xs[5]));
    if (!t) continue;
    const double a = std::hypot(xs[2] - xs[4], xs[3] - xs[5]);
    const double b = std::hypot(xs[0] - xs[4], xs[1] - xs[5]);
    const double c = std::hypot(xs[0] - xs[2], xs[1] - xs[3]);
    const double area = std::abs((xs[2] - xs[0]) * (xs[5] - xs[1]) - (xs[4] - xs[0]) * (xs[3] - xs[1])) / 2;
    if (area < 1e-3) continue;
    const double inradius = area / ((a + b + c) / 2);
    const Point j = incenter_and_bisector_feet(*t).incenter;
    for (int k = 0; k < 3; ++k) {
      const Line side = line_through((*t)[k], (*t)[(k + 1) % 3]);
      EXPECT_NEAR(std::abs(signed_distance(j, side).to_double()), inradius, 1e-9);
    }
  }
}

TEST(Concyclic, UnitCircle) { EXPECT_TRUE(concyclic(q(1, 0), q(0, 1), q(-1, 0), q(0, -1))); }

TEST(Concyclic, SquareCorners) { EXPECT_TRUE(concyclic(q(0, 0), q(1, 0), q(0, 1), q(1, 1))); }

TEST(Concyclic, OffCircle) {
  EXPECT_FALSE(concyclic(q(0, 0), q(1, 0), q(0, 1), q(2, 2)));
  // rows [x, y, x^2 + y^2, 1]: the 4x4 determinant reduces to -4 here
  EXPECT_NE(concyclic_determinant(q(0, 0), q(1, 0), q(0, 1), q(2, 2)).raw_sign(), 0);
  EXPECT_FALSE(concyclic(r(0, 0), r(1, 0), r(0, 1), r(2, 2)));
}

TEST(Concyclic, RepeatedPointIsRejected) {
  EXPECT_THROW(concyclic(q(0, 0), q(1, 0), q(0, 0), q(1, 1)), GeometryError);
}

TEST(Reflect, OverTheXAxis) {
  const Point p = reflect(q(1, 1), line_through(q(0, 0), q(1, 0)));
  EXPECT_EQ(p.x.rational(), 1);
  EXPECT_EQ(p.y.rational(), -1);
}

TEST(Reflect, OverTheYAxis) {
  const Point p = reflect(q(3, 0), line_through(q(0, 0), q(0, 1)));
  EXPECT_EQ(p.x.rational(), -3);
  EXPECT_EQ(p.y.rational(), 0);
}

TEST(Reflect, OverTheDiagonalSwapsCoordinates) {
  const Point p = reflect(q(1, 2), line_through(q(0, 0), q(1, 1)));
  EXPECT_EQ(p.x.rational(), 2);
  EXPECT_EQ(p.y.rational(), 1);
}

TEST(Reflect, IsAnInvolutionAndPreservesDistances) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Line axis = line_through(q(rng.integer(-9, 9), rng.integer(-9, 9)), q(rng.integer(10, 19), rng.integer(-9, 9)));
    const Point a = q(rng.integer(-30, 30), rng.integer(-30, 30));
    const Point b = q(rng.integer(-30, 30), rng.integer(-30, 30));
    const Point ra = reflect(a, axis);
    const Point back = reflect(ra, axis);
    EXPECT_EQ(back.x.rational(), a.x.rational());
    EXPECT_EQ(back.y.rational(), a.y.rational());
    EXPECT_EQ(squared_distance(ra, reflect(b, axis)).rational(), squared_distance(a, b).rational());
  }
}

TEST(Lines, IntersectionFootAndIncidence) {
  const Line l1 = line_through(q(0, 0), q(2, 2));
  const Line l2 = line_through(q(0, 2), q(2, 0));
  const auto x = line_intersection(l1, l2);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->x.rational(), 1);
  EXPECT_EQ(x->y.rational(), 1);
  EXPECT_FALSE(line_intersection(l1, line_through(q(0, 1), q(1, 2))).has_value());

  const Point f = foot_of_perpendicular(q(0, 2), l1);
  EXPECT_EQ(f.x.rational(), 1);
  EXPECT_EQ(f.y.rational(), 1);
  EXPECT_TRUE(point_on_line(f, l1));
  EXPECT_FALSE(point_on_line(q(0, 2), l1));
  EXPECT_TRUE(l1.same_as(Line(Scalar::exact(-3), Scalar::exact(3), Scalar::exact(0))));
}

TEST(Lines, InternalBisectorPassesThroughIncenter) {
  const Triangle t(q(0, 0), q(4, 0), q(0, 3));
  const Point j = incenter_and_bisector_feet(t).incenter;
  for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) EXPECT_TRUE(point_on_line(j, internal_bisector_line(t, v)));
}

TEST(Orientation, SignsAndBetweenness) {
  EXPECT_EQ(orientation(q(0, 0), q(1, 0), q(0, 1)), 1);
  EXPECT_EQ(orientation(q(0, 0), q(0, 1), q(1, 0)), -1);
  EXPECT_EQ(orientation(q(0, 0), q(1, 1), q(3, 3)), 0);
  EXPECT_TRUE(strictly_between(q(1, 1), q(0, 0), q(3, 3)));
  EXPECT_FALSE(strictly_between(q(3, 3), q(0, 0), q(3, 3)));
  EXPECT_FALSE(strictly_between(q(4, 4), q(0, 0), q(3, 3)));
}

TEST(Isometry, RejectsNonUnitRotation) {
  EXPECT_THROW(Isometry(Scalar::exact(1), Scalar::exact(1), q(0, 0), false), GeometryError);
}

TEST(Isometry, ComposeInverseAndAngleInvariance) {
  // rotation by the 3-4-5 direction, then a translation, mirrored
  const Isometry g(Scalar::exact(3, 5), Scalar::exact(4, 5), q(7, -2), true);
  const Isometry h(Scalar::exact(-5, 13), Scalar::exact(12, 13), q(-1, 4), false);
  const Triangle t(q(0, 0), q(5, 1), q(2, 6));
  const Triangle gh = g.compose(h).apply(t);
  const Triangle step = g.apply(h.apply(t));
  const Triangle back = g.inverse().apply(g.apply(t));
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(gh[k].x.rational(), step[k].x.rational());
    EXPECT_EQ(gh[k].y.rational(), step[k].y.rational());
    EXPECT_EQ(back[k].x.rational(), t[k].x.rational());
    EXPECT_EQ(back[k].y.rational(), t[k].y.rational());
  }
  for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
    EXPECT_TRUE(gh.angle(v).equals(t.angle(v)));
    EXPECT_EQ(gh.side_sq(v).rational(), t.side_sq(v).rational());
  }
}

TEST(Isometry, SegmentToSegment) {
  const Point p1 = r(3, 4), q1 = r(3, 6);
  const Point p = r(0, 0), qq = r(2, 0);
  for (bool mirror : {false, true}) {
    const Isometry g = isometry_taking_segment_to_segment(p1, q1, p, qq, mirror);
    EXPECT_TRUE(same_point(g.apply(p1), p));
    EXPECT_TRUE(same_point(g.apply(q1), qq));
    EXPECT_EQ(g.mirror(), mirror);
  }
  EXPECT_THROW(isometry_taking_segment_to_segment(p1, q1, p, r(3, 0), false), GeometryError);
}

}  // namespace
}  // namespace planicheck
