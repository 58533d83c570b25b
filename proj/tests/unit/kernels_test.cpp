#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "planicheck/kernels.hpp"
#include "planicheck/random.hpp"
#include "planicheck/scenarios.hpp"

namespace planicheck::kernels {
namespace {

constexpr double kDeg = M_PI / 180.0;
constexpr Family kFamilies[] = {Family::MedialCircumcenter, Family::IncenterSegments, Family::SquareCenter,
                                Family::RectangleCenter, Family::Bisector30};

bool same_bits(double x, double y) { return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y); }

TEST(Isa, ParseAndResolve) {
  EXPECT_EQ(parse_isa("scalar"), Isa::Scalar);
  EXPECT_EQ(parse_isa("avx2"), Isa::Avx2);
  EXPECT_EQ(parse_isa("auto"), Isa::Auto);
  EXPECT_THROW(parse_isa("sse9"), std::invalid_argument);
  EXPECT_TRUE(isa_available(Isa::Scalar));
  EXPECT_NE(resolve(Isa::Auto), Isa::Auto);
  EXPECT_EQ(resolve(Isa::Scalar), Isa::Scalar);
}

class VectorVariant : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!isa_available(Isa::Avx2)) GTEST_SKIP() << "no AVX2 on this machine";
  }
};

TEST_F(VectorVariant, ResidualRowsMatchScalarBitwise) {
  Rng rng(1);
  // odd lengths exercise the scalar tail
  for (std::size_t n : {1u, 3u, 4u, 7u, 33u, 359u}) {
    std::vector<double> cb(n), sb(n), ref(n), vec(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double beta = rng.uniform(0.5, 120.0) * kDeg;
      cb[j] = std::cos(beta);
      sb[j] = std::sin(beta);
    }
    for (Family f : kFamilies) {
      const double alpha = rng.uniform(0.5, 59.0) * kDeg;
      const RowInput row{std::cos(alpha), std::sin(alpha), cb, sb, rng.uniform(0.05, 0.95)};
      residual_row(f, row, ref, Isa::Scalar);
      residual_row(f, row, vec, Isa::Avx2);
      for (std::size_t j = 0; j < n; ++j) ASSERT_TRUE(same_bits(ref[j], vec[j])) << "n=" << n << " j=" << j;
    }
  }
}

TEST_F(VectorVariant, SsaBatchMatchesScalarBitwise) {
  Rng rng(2);
  const std::size_t n = 4099;
  std::vector<double> a(n), b(n), c(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = rng.uniform(0.1, 10);
    const double th = rng.uniform(1, 179) * kDeg;
    c[i] = std::cos(th);
    s[i] = std::sin(th);
    // a third of the specs sit exactly on the tangent or isosceles boundary
    switch (i % 3) {
      case 0: a[i] = rng.uniform(0.1, 10); break;
      case 1: a[i] = b[i] * s[i]; break;
      default: a[i] = b[i]; break;
    }
  }
  std::vector<std::vector<double>> ref(5, std::vector<double>(n)), vec(5, std::vector<double>(n));
  ssa_batch({a, b, c, s, 1e-9}, {ref[0], ref[1], ref[2], ref[3], ref[4]}, Isa::Scalar);
  ssa_batch({a, b, c, s, 1e-9}, {vec[0], vec[1], vec[2], vec[3], vec[4]}, Isa::Avx2);
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t i = 0; i < n; ++i) ASSERT_TRUE(same_bits(ref[k][i], vec[k][i])) << "field " << k << " spec " << i;
  }
}

TEST(Kernels, SsaBatchLayout) {
  // a = 1, b = sqrt 3, 30 deg: third sides 1 and 2
  const std::vector<double> a{1.0, 1.0, 2.0}, b{std::sqrt(3.0), 3.0, 1.0};
  const std::vector<double> c(3, std::cos(30 * kDeg)), s(3, std::sin(30 * kDeg));
  std::vector<double> cnt(3), lo(3), hi(3), clo(3), chi(3);
  ssa_batch({a, b, c, s, 1e-9}, {cnt, lo, hi, clo, chi}, Isa::Auto);
  EXPECT_EQ(cnt[0], 2.0);
  EXPECT_NEAR(lo[0], 1.0, 1e-12);
  EXPECT_NEAR(hi[0], 2.0, 1e-12);
  EXPECT_NEAR(clo[0], -0.5, 1e-12);
  EXPECT_NEAR(chi[0], 0.5, 1e-12);
  EXPECT_EQ(cnt[1], 0.0);
  EXPECT_TRUE(std::isnan(lo[1]) && std::isnan(hi[1]));
  EXPECT_EQ(cnt[2], 1.0);
  EXPECT_TRUE(std::isnan(lo[2]));
  EXPECT_FALSE(std::isnan(hi[2]));
}

TEST(Kernels, SizeMismatchIsRejected) {
  std::vector<double> one(1), two(2);
  EXPECT_THROW(ssa_batch({one, one, one, two, 1e-9}, {one, one, one, one, one}), std::invalid_argument);
  EXPECT_THROW(residual_row(Family::Bisector30, {1, 0, one, two, 0.5}, one), std::invalid_argument);
}

// The kernels repeat each construction in closed form; the scenario builders
// are the point-by-point reference.
TEST(Kernels, ResidualsAgreeWithScenarioConstructions) {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const double alpha = rng.uniform(2, 88) * kDeg, beta = rng.uniform(2, 88) * kDeg;
    const ShapeParams p{alpha, beta};
    const double t = rng.uniform(0.05, 0.95);
    EXPECT_NEAR(residual_at(Family::MedialCircumcenter, alpha, beta), medial_circumcenter(p).residual.to_double(), 1e-12);
    EXPECT_NEAR(residual_at(Family::IncenterSegments, alpha, beta), incenter_equal_segments(p).residual.to_double(), 1e-12);
    EXPECT_NEAR(residual_at(Family::SquareCenter, alpha, beta), inscribed_square(p).residual.to_double(), 1e-12);
    EXPECT_NEAR(residual_at(Family::RectangleCenter, alpha, beta, t), inscribed_rectangle(p, t).residual.to_double(),
                1e-12);
    EXPECT_NEAR(residual_at(Family::Bisector30, alpha, beta), bisector_30(p).residual.to_double(), 1e-12);
  }
}

}  // namespace
}  // namespace planicheck::kernels
