#include <gtest/gtest.h>

#include <cmath>

#include "planicheck/scalar.hpp"

namespace planicheck {
namespace {

TEST(Scalar, ExactValuesAreNormalized) {
  const Scalar q = Scalar::exact(6, -4);
  EXPECT_EQ(q.rational(), mpq_class(-3, 2));
  EXPECT_EQ(q.rational().get_den(), 2);
  EXPECT_EQ(Scalar::exact("10/4").rational(), mpq_class(5, 2));
  EXPECT_EQ(Scalar::exact("-7").rational(), mpq_class(-7));
}

TEST(Scalar, ExactArithmeticHasNoRoundoff) {
  const Scalar third = Scalar::exact(1, 3);
  const Scalar sum = third + third + third;
  EXPECT_EQ(sum.rational(), mpq_class(1));
  EXPECT_EQ((Scalar::exact(1, 10) * Scalar::exact(3) - Scalar::exact(3, 10)).raw_sign(), 0);
}

TEST(Scalar, MixedBackendsAreRejected) {
  try {
    (void)(Scalar::exact(1) + Scalar::real(1.0));
    FAIL() << "mixed arithmetic accepted";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BackendMismatch);
  }
  EXPECT_THROW((void)near(Scalar::exact(1), Scalar::real(1.0)), GeometryError);
}

TEST(Scalar, DivisionByZeroIsDegenerate) {
  try {
    (void)(Scalar::exact(1) / Scalar::exact(0));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Degenerate);
  }
  EXPECT_THROW((void)(Scalar::real(1.0) / Scalar::real(0.0)), GeometryError);
}

TEST(Scalar, FloatSignUsesScaledTolerance) {
  const Scalar tiny = Scalar::real(5e-10);
  EXPECT_EQ(tiny.sign(), 0);
  EXPECT_EQ(tiny.sign(0.1), 1);
  EXPECT_EQ(tiny.raw_sign(), 1);
  EXPECT_EQ(Scalar::real(-2e-9).sign(), -1);
  EXPECT_EQ(Scalar::real(5e-7, 1e-6).sign(), 0);
}

TEST(Scalar, FloatToleranceIsSymmetricAndReflexive) {
  const Scalar a = Scalar::real(1.0);
  const Scalar b = Scalar::real(1.0 + 4e-10);
  EXPECT_TRUE(near(a, a));
  EXPECT_TRUE(near(a, b));
  EXPECT_TRUE(near(b, a));
  EXPECT_EQ(compare(a, b), 0);
  EXPECT_EQ(compare(a, Scalar::real(1.1)), -1);
}

TEST(Scalar, FloatKeepsTheLargerTolerance) {
  const Scalar s = Scalar::real(1.0, 1e-12) + Scalar::real(2.0, 1e-6);
  EXPECT_EQ(s.eps(), 1e-6);
}

TEST(Scalar, ExactSqrtOnlyForRationalSquares) {
  EXPECT_EQ(Scalar::exact(9, 4).sqrt().rational(), mpq_class(3, 2));
  try {
    (void)Scalar::exact(2).sqrt();
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRepresentable);
  }
  mpq_class root;
  EXPECT_TRUE(exact_rational_sqrt(mpq_class(49, 81), root));
  EXPECT_EQ(root, mpq_class(7, 9));
  EXPECT_FALSE(exact_rational_sqrt(mpq_class(3, 4), root));
  EXPECT_DOUBLE_EQ(Scalar::real(2.0).sqrt().to_double(), std::sqrt(2.0));
}

TEST(Scalar, LikeCopiesBackendAndTolerance) {
  const Scalar f = Scalar::like(Scalar::real(0.5, 1e-7), 3);
  EXPECT_EQ(f.backend(), Backend::Float);
  EXPECT_EQ(f.eps(), 1e-7);
  EXPECT_EQ(f.to_double(), 3.0);
  EXPECT_EQ(Scalar::like(Scalar::exact(1, 2), 3).rational(), mpq_class(3));
}

TEST(Scalar, AbsAndNegation) {
  EXPECT_EQ(Scalar::exact(-3, 7).abs().rational(), mpq_class(3, 7));
  EXPECT_EQ((-Scalar::real(2.5)).to_double(), -2.5);
}

}  // namespace
}  // namespace planicheck
