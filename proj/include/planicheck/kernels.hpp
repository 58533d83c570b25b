#pragma once

#include <cstddef>
#include <span>

namespace planicheck::kernels {

enum class Isa { Auto, Scalar, Avx2 };

const char* to_string(Isa isa);
/// Parses "auto", "scalar", "avx2".
Isa parse_isa(const char* name);

bool isa_available(Isa isa);
/// Auto resolves to the widest ISA this CPU supports; an unavailable explicit
/// request throws std::runtime_error.
Isa resolve(Isa requested);

/// Residual families evaluated on the shape grid. All take the base angles
/// (alpha at A, beta at B) of a triangle with A = (0,0), B = (1,0).
enum class Family { MedialCircumcenter, IncenterSegments, SquareCenter, RectangleCenter, Bisector30 };

/// Scalar reference evaluation at one shape. `param` is the rectangle height
/// fraction and is ignored by the other families.
double residual_at(Family f, double alpha, double beta, double param = 0.5);

/// One grid row: fixed alpha (given by its cosine and sine), a run of betas.
struct RowInput {
  double cos_alpha;
  double sin_alpha;
  std::span<const double> cos_beta;
  std::span<const double> sin_beta;
  double param = 0.5;
};

/// All spans must have the same length; throws std::invalid_argument otherwise.
void residual_row(Family f, const RowInput& row, std::span<double> out, Isa isa = Isa::Auto);

/// Structure-of-arrays batch for the float SSA solve in canonical pose.
struct SsaBatchInput {
  std::span<const double> side_a;
  std::span<const double> side_b;
  std::span<const double> cos_theta;
  std::span<const double> sin_theta;
  double eps = 1e-9;
};

/// Per spec: solution count, third sides VX ascending and cosines of the
/// apex angle (opposite side_b). Unused slots hold NaN; with one solution it
/// is stored in the `hi` slot.
struct SsaBatchOutput {
  std::span<double> count;
  std::span<double> third_lo;
  std::span<double> third_hi;
  std::span<double> cos_apex_lo;
  std::span<double> cos_apex_hi;
};

/// All spans must have the same length; throws std::invalid_argument otherwise.
void ssa_batch(const SsaBatchInput& in, const SsaBatchOutput& out, Isa isa = Isa::Auto);

}  // namespace planicheck::kernels
