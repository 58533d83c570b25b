#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "planicheck/kernels.hpp"
#include "planicheck/random.hpp"
#include "planicheck/scalar.hpp"
#include "planicheck/ssa.hpp"

namespace planicheck {

/// Outcome of one seeded check. Non-gating checks are reported but never fail
/// a run.
struct CheckResult {
  std::string name;
  bool pass = true;
  bool gating = true;
  std::size_t samples = 0;
  double worst_residual = 0.0;
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> witnesses;

  void fail(std::string witness);
};

/// Law-of-sines reference for a float spec: angles at the apex and at the far
/// base vertex, ordered like solve_ssa's output (ascending third side).
struct OracleSolution {
  double apex_angle;
  double far_angle;
};
std::vector<OracleSolution> law_of_sines_oracle(double side_a, double side_b, double theta);

/// A rational SSA instance with two solutions: a Pythagorean direction and
/// rational third sides x_lo < x_hi.
struct RationalSsa {
  mpq_class side_a_sq, side_b, cos_theta, sin_theta, x_lo, x_hi;

  SsaSpec exact() const;
  SsaSpec as_float(double eps = kDefaultEps) const;
};
RationalSsa random_two_solution_rational(Rng& rng);

/// A float spec with exactly two solutions (acute angle, a < b, a > b sin).
SsaSpec random_two_solution_float(Rng& rng, double eps = kDefaultEps);

/// solve_ssa against the law of sines over lengths in [0.1, 10] and angles in
/// (1, 179) degrees. Angle tolerance in radians.
CheckResult ssa_oracle_suite(std::size_t samples, std::uint64_t seed, double angle_tol = 1e-9,
                             double eps = kDefaultEps);

/// Vector kernels against the scalar reference (bitwise) and the batch counts
/// against ssa_solution_count.
CheckResult kernel_agreement_suite(std::size_t samples, std::uint64_t seed, kernels::Isa isa = kernels::Isa::Auto);

/// classify_pair on two-solution specs: every pair must come out
/// Supplementary. Float pairs bound |cos1 + cos2|; exact pairs need zero.
CheckResult dichotomy_suite(std::size_t samples, std::uint64_t seed, Backend backend, double tol = 1e-9);

/// Non-congruent common-side pairs ABC, ABD (AC = AD, equal angles at B)
/// placed on opposite sides of AB after a random rigid motion.
CheckResult lemma_suite(std::size_t samples, std::uint64_t seed, double tol = 1e-9);

/// Exact and float evaluation of the same rational instances must agree on
/// every boolean verdict.
CheckResult backend_agreement_suite(std::size_t samples, std::uint64_t seed);

}  // namespace planicheck
