#include "kernels/variants.hpp"

namespace planicheck::kernels::detail {

void residual_row_scalar(Family f, const RowInput& row, std::span<double> out) {
  with_family(f, [&](auto body) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = body(row.cos_alpha, row.sin_alpha, row.cos_beta[j], row.sin_beta[j], row.param);
    }
  });
}

void ssa_batch_scalar(const SsaBatchInput& in, const SsaBatchOutput& out, std::size_t begin) {
  for (std::size_t i = begin; i < in.side_a.size(); ++i) {
    const auto r = formulas::ssa(in.side_a[i], in.side_b[i], in.cos_theta[i], in.sin_theta[i], in.eps);
    out.count[i] = r.count;
    out.third_lo[i] = r.lo;
    out.third_hi[i] = r.hi;
    out.cos_apex_lo[i] = r.cos_lo;
    out.cos_apex_hi[i] = r.cos_hi;
  }
}

}  // namespace planicheck::kernels::detail
