#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

#include "kernels/variants.hpp"

namespace planicheck::kernels {

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::Auto: return "auto";
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "?";
}

Isa parse_isa(const char* name) {
  if (std::strcmp(name, "auto") == 0) return Isa::Auto;
  if (std::strcmp(name, "scalar") == 0) return Isa::Scalar;
  if (std::strcmp(name, "avx2") == 0) return Isa::Avx2;
  throw std::invalid_argument(std::string("unknown kernel ISA: ") + name);
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Auto:
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(PLANICHECK_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa resolve(Isa requested) {
  if (requested == Isa::Auto) return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  if (!isa_available(requested)) {
    throw std::runtime_error(std::string("kernel ISA not available on this CPU: ") + to_string(requested));
  }
  return requested;
}

double residual_at(Family f, double alpha, double beta, double param) {
  double out = 0.0;
  detail::with_family(f, [&](auto body) {
    out = body(std::cos(alpha), std::sin(alpha), std::cos(beta), std::sin(beta), param);
  });
  return out;
}

void residual_row(Family f, const RowInput& row, std::span<double> out, Isa isa) {
  if (row.cos_beta.size() != out.size() || row.sin_beta.size() != out.size()) {
    throw std::invalid_argument("residual_row: mismatched row lengths");
  }
#if defined(PLANICHECK_HAVE_AVX2)
  if (resolve(isa) == Isa::Avx2) return detail::residual_row_avx2(f, row, out);
#else
  resolve(isa);
#endif
  detail::residual_row_scalar(f, row, out);
}

void ssa_batch(const SsaBatchInput& in, const SsaBatchOutput& out, Isa isa) {
  const std::size_t n = in.side_a.size();
  if (in.side_b.size() != n || in.cos_theta.size() != n || in.sin_theta.size() != n ||
      out.count.size() != n || out.third_lo.size() != n || out.third_hi.size() != n ||
      out.cos_apex_lo.size() != n || out.cos_apex_hi.size() != n) {
    throw std::invalid_argument("ssa_batch: mismatched array lengths");
  }
#if defined(PLANICHECK_HAVE_AVX2)
  if (resolve(isa) == Isa::Avx2) return detail::ssa_batch_avx2(in, out);
#else
  resolve(isa);
#endif
  detail::ssa_batch_scalar(in, out, 0);
}

}  // namespace planicheck::kernels
