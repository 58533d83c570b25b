#pragma once

#include "planicheck/kernels.hpp"
#include "kernels/formulas.hpp"

namespace planicheck::kernels::detail {

void residual_row_scalar(Family f, const RowInput& row, std::span<double> out);
void ssa_batch_scalar(const SsaBatchInput& in, const SsaBatchOutput& out, std::size_t begin);

#if defined(PLANICHECK_HAVE_AVX2)
void residual_row_avx2(Family f, const RowInput& row, std::span<double> out);
void ssa_batch_avx2(const SsaBatchInput& in, const SsaBatchOutput& out);
#endif

// Calls run(body) with a generic lambda evaluating family f; the lambda works
// for every lane type.
template <class Run>
void with_family(Family f, Run&& run) {
  switch (f) {
    case Family::MedialCircumcenter:
      run([](auto... a) { return formulas::medial_circumcenter(a...); });
      break;
    case Family::IncenterSegments:
      run([](auto... a) { return formulas::incenter_segments(a...); });
      break;
    case Family::SquareCenter:
      run([](auto... a) { return formulas::square_center(a...); });
      break;
    case Family::RectangleCenter:
      run([](auto... a) { return formulas::rectangle_center(a...); });
      break;
    case Family::Bisector30:
      run([](auto... a) { return formulas::bisector_30(a...); });
      break;
  }
}

}  // namespace planicheck::kernels::detail
