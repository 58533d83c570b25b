#pragma once

#include <cstdint>
#include <random>

namespace planicheck {

/// Seeded generator with a fixed bits-to-double mapping, so a seed names the
/// same sample stream on every standard library.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/u53";

  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer on [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace planicheck
