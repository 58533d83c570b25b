#include "kernels/variants.hpp"
#include "kernels/vec4d_avx2.hpp"

namespace planicheck::kernels::detail {

using lanes::Vec4d;

void residual_row_avx2(Family f, const RowInput& row, std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t full = n - n % 4;
  with_family(f, [&](auto body) {
    const Vec4d ca(row.cos_alpha), sa(row.sin_alpha), p(row.param);
    for (std::size_t j = 0; j < full; j += 4) {
      const Vec4d r = body(ca, sa, Vec4d::load(&row.cos_beta[j]), Vec4d::load(&row.sin_beta[j]), p);
      r.store(&out[j]);
    }
    for (std::size_t j = full; j < n; ++j) {
      out[j] = body(row.cos_alpha, row.sin_alpha, row.cos_beta[j], row.sin_beta[j], row.param);
    }
  });
}

void ssa_batch_avx2(const SsaBatchInput& in, const SsaBatchOutput& out) {
  const std::size_t n = in.side_a.size();
  const std::size_t full = n - n % 4;
  const Vec4d eps(in.eps);
  for (std::size_t i = 0; i < full; i += 4) {
    const auto r = formulas::ssa(Vec4d::load(&in.side_a[i]), Vec4d::load(&in.side_b[i]),
                                 Vec4d::load(&in.cos_theta[i]), Vec4d::load(&in.sin_theta[i]), eps);
    r.count.store(&out.count[i]);
    r.lo.store(&out.third_lo[i]);
    r.hi.store(&out.third_hi[i]);
    r.cos_lo.store(&out.cos_apex_lo[i]);
    r.cos_hi.store(&out.cos_apex_hi[i]);
  }
  ssa_batch_scalar(in, out, full);
}

}  // namespace planicheck::kernels::detail
