#pragma once

// Four doubles in one ymm register. Only include from translation units
// compiled with -mavx2.

#include <immintrin.h>

namespace planicheck::kernels::lanes {

struct Mask4d {
  __m256d m;
};

struct Vec4d {
  __m256d v;

  Vec4d() = default;
  Vec4d(__m256d x) : v(x) {}  // NOLINT(google-explicit-constructor)
  Vec4d(double x) : v(_mm256_set1_pd(x)) {}  // NOLINT(google-explicit-constructor)

  static Vec4d load(const double* p) { return _mm256_loadu_pd(p); }
  void store(double* p) const { _mm256_storeu_pd(p, v); }
};

inline Vec4d operator+(Vec4d a, Vec4d b) { return _mm256_add_pd(a.v, b.v); }
inline Vec4d operator-(Vec4d a, Vec4d b) { return _mm256_sub_pd(a.v, b.v); }
inline Vec4d operator*(Vec4d a, Vec4d b) { return _mm256_mul_pd(a.v, b.v); }
inline Vec4d operator/(Vec4d a, Vec4d b) { return _mm256_div_pd(a.v, b.v); }

inline Vec4d sqrt(Vec4d x) { return _mm256_sqrt_pd(x.v); }
// max_pd / min_pd return the second operand unless the comparison holds,
// matching the scalar `a > b ? a : b` / `a < b ? a : b`.
inline Vec4d max(Vec4d a, Vec4d b) { return _mm256_max_pd(a.v, b.v); }
inline Vec4d min(Vec4d a, Vec4d b) { return _mm256_min_pd(a.v, b.v); }
inline Vec4d abs(Vec4d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x.v); }

inline Mask4d lt(Vec4d a, Vec4d b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ)}; }
inline Mask4d gt(Vec4d a, Vec4d b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ)}; }
inline Mask4d le(Vec4d a, Vec4d b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LE_OQ)}; }
inline Mask4d both(Mask4d a, Mask4d b) { return {_mm256_and_pd(a.m, b.m)}; }
inline Mask4d either(Mask4d a, Mask4d b) { return {_mm256_or_pd(a.m, b.m)}; }
inline Vec4d select(Mask4d m, Vec4d a, Vec4d b) { return _mm256_blendv_pd(b.v, a.v, m.m); }
inline Vec4d as_unit(Mask4d m) { return _mm256_and_pd(m.m, _mm256_set1_pd(1.0)); }

}  // namespace planicheck::kernels::lanes
