#include <gtest/gtest.h>

#include <cmath>

#include "planicheck/congruence.hpp"
#include "planicheck/random.hpp"

namespace planicheck {
namespace {

// Float triangle with BC = a, CA = b, AB = c.
Triangle from_sides(double a, double b, double c) {
  const double x = (b * b + c * c - a * a) / (2 * c);
  return Triangle(Point::real(0, 0), Point::real(c, 0), Point::real(x, std::sqrt(b * b - x * x)));
}

Triangle moved(const Triangle& t, double phi, double tx, double ty, bool mirror) {
  return Isometry(Scalar::real(std::cos(phi)), Scalar::real(std::sin(phi)), Point::real(tx, ty), mirror).apply(t);
}

TEST(Criteria, IdenticalTrianglesSatisfyAll) {
  const auto e = TriangleElements::of(from_sides(3, 4, 5));
  const auto id = Correspondence::identity();
  EXPECT_TRUE(criterion_a(e, e, id));
  EXPECT_TRUE(criterion_b(e, e, id));
  EXPECT_TRUE(criterion_c(e, e, id));
  EXPECT_EQ(criterion_d(e, e, id), CriterionResult::Holds);
}

TEST(Criteria, EquilateralTwoSidesAndIncludedAngle) {
  const auto e1 = TriangleElements::of(from_sides(2, 2, 2));
  const auto e2 = TriangleElements::of(moved(from_sides(2, 2, 2), 1.0, 3, -1, true));
  EXPECT_TRUE(criterion_a(e1, e2, Correspondence::identity()));
}

TEST(Criteria, DifferentIncludedAngleFailsA) {
  // sides 3 and 4 meet at C in both; the third sides 5 and 6 differ
  const auto e1 = TriangleElements::of(from_sides(3, 4, 5));
  const auto e2 = TriangleElements::of(from_sides(3, 4, 6));
  EXPECT_FALSE(criterion_a(e1, e2, Correspondence::identity()));
  EXPECT_FALSE(criterion_c(e1, e2, Correspondence::identity()));
  // law of cosines oracle for the angle at C
  EXPECT_NEAR(e1.angle(Vertex::C).cos(), 0.0, 1e-12);
  EXPECT_NEAR(e2.angle(Vertex::C).cos(), (9.0 + 16.0 - 36.0) / 24.0, 1e-12);
}

TEST(Criteria, ThreeSidesUnderRotatingCorrespondence) {
  const auto e1 = TriangleElements::of(from_sides(3, 4, 5));
  const auto e2 = TriangleElements::of(from_sides(4, 5, 3));
  // a = 3 is c' in the second, b = 4 is a', c = 5 is b'
  const Correspondence rot({2, 0, 1});
  EXPECT_TRUE(criterion_c(e1, e2, rot));
  EXPECT_FALSE(criterion_c(e1, e2, Correspondence::identity()));
  EXPECT_TRUE(criterion_a(e1, e2, rot));
  EXPECT_TRUE(criterion_b(e1, e2, rot));
}

TEST(Criteria, AngleOppositeGreaterSide) {
  // a = 2 opposite the 40 degree angle at A, b = 1: a unique triangle
  const double th = 40.0 * M_PI / 180.0;
  const double x = std::cos(th) + std::sqrt(4.0 - std::sin(th) * std::sin(th));
  const Triangle t(Point::real(0, 0), Point::real(1, 0), Point::real(x * std::cos(th), x * std::sin(th)));
  const auto e1 = TriangleElements::of(t);
  const auto e2 = TriangleElements::of(moved(t, 2.0, 5, 5, false));
  EXPECT_EQ(criterion_d(e1, e2, Correspondence::identity()), CriterionResult::Holds);
}

TEST(Criteria, AngleOppositeSmallerSideIsNotApplicable) {
  // a = 1 opposite 30 degrees, b = sqrt 3: the two ambiguous triangles
  const double s3 = std::sqrt(3.0);
  const double c = std::cos(M_PI / 6), s = std::sin(M_PI / 6);
  const Triangle t1(Point::real(0, 0), Point::real(s3, 0), Point::real(1 * c, 1 * s));
  const Triangle t2(Point::real(0, 0), Point::real(s3, 0), Point::real(2 * c, 2 * s));
  const auto e1 = TriangleElements::of(t1);
  const auto e2 = TriangleElements::of(t2);
  EXPECT_EQ(criterion_d(e1, e2, Correspondence::identity()), CriterionResult::NotApplicable);
  EXPECT_FALSE(criterion_c(e1, e2, Correspondence::identity()));
}

TEST(Criteria, UnrelatedTrianglesFailD) {
  const auto e1 = TriangleElements::of(from_sides(3, 4, 5));
  const auto e2 = TriangleElements::of(from_sides(6, 7, 8));
  EXPECT_EQ(criterion_d(e1, e2, Correspondence::identity()), CriterionResult::Fails);
}

TEST(CongruentAny, MirrorImage) {
  const Triangle t = from_sides(3, 4, 5);
  const auto c = congruent_any(t, moved(t, 0.7, -2, 9, true));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, Correspondence::identity());
}

TEST(CongruentAny, SimilarIsNotCongruent) {
  EXPECT_FALSE(congruent_any(from_sides(3, 4, 5), from_sides(6, 8, 10)).has_value());
}

TEST(CongruentAny, FindsTheRelabeling) {
  const Triangle t(Point::exact(0, 0), Point::exact(4, 0), Point::exact(0, 3));
  // every relabeling of the vertices is found, and only that one (scalene)
  for (const Correspondence& perm : Correspondence::all()) {
    const auto& m = perm.map();
    const Triangle u(t[m[0]], t[m[1]], t[m[2]]);
    // u's vertex i is t's vertex m[i], so t -> u maps m[i] to i
    const auto c = congruent_any(t, u);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, perm.inverse());
  }
}

TEST(CongruentAny, SymmetricUpToInverse) {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Triangle t = from_sides(3 + rng.uniform(), 4 + rng.uniform(), 5 + rng.uniform());
    const auto& m = Correspondence::all()[rng.integer(0, 5)].map();
    const Triangle u = moved(Triangle(t[m[0]], t[m[1]], t[m[2]]), rng.uniform(0, 6.3), rng.uniform(-9, 9),
                             rng.uniform(-9, 9), rng.uniform() < 0.5);
    const auto fwd = congruent_any(t, u);
    const auto back = congruent_any(u, t);
    ASSERT_TRUE(fwd && back);
    EXPECT_EQ(fwd->inverse(), *back);
    const auto e1 = TriangleElements::of(t);
    const auto e2 = TriangleElements::of(u);
    EXPECT_TRUE(criterion_a(e1, e2, *fwd));
    EXPECT_TRUE(criterion_b(e1, e2, *fwd));
  }
}

TEST(Correspondence, AllPermutationsAreDistinct) {
  const auto& all = Correspondence::all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i] == all[j]);
    EXPECT_EQ(all[i].inverse().inverse(), all[i]);
  }
  EXPECT_THROW(Correspondence({0, 0, 1}), GeometryError);
}

}  // namespace
}  // namespace planicheck
