#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace planicheck {

enum class Backend { Exact, Float };

enum class ErrorCode {
  Degenerate,
  BackendMismatch,
  NotRepresentable,
  InvalidArgument,
  Precondition,
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline constexpr double kDefaultEps = 1e-9;

/// A number in one of two backends: a normalized rational (Exact) or a
/// binary64 value carrying its comparison tolerance (Float).
///
/// Arithmetic between the two backends throws BackendMismatch. Float results
/// keep the larger of the two operand tolerances.
class Scalar {
 public:
  Scalar() = default;

  static Scalar exact(mpq_class q);
  static Scalar exact(long num, long den = 1);
  /// Parses "p/q" or "p".
  static Scalar exact(std::string_view text);
  static Scalar real(double v, double eps = kDefaultEps);

  /// An integer constant in the same backend (and tolerance) as `like`.
  static Scalar like(const Scalar& like, long n);

  Backend backend() const noexcept {
    return std::holds_alternative<mpq_class>(value_) ? Backend::Exact : Backend::Float;
  }
  bool is_exact() const noexcept { return backend() == Backend::Exact; }
  double eps() const noexcept { return eps_; }

  const mpq_class& rational() const;
  double to_double() const;

  /// Sign of the stored value, no tolerance applied.
  int raw_sign() const;
  /// Sign with tolerance: Float values within eps*scale of zero report 0.
  int sign(double scale = 1.0) const;
  bool is_zero(double scale = 1.0) const { return sign(scale) == 0; }

  Scalar abs() const;
  /// Exact backend succeeds only for squares of rationals.
  Scalar sqrt() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  std::string to_string() const;

 private:
  std::variant<double, mpq_class> value_{0.0};
  double eps_ = kDefaultEps;

  void check_same(const Scalar& o) const;
};

/// |a - b| <= eps*scale (Float) or a == b (Exact).
bool near(const Scalar& a, const Scalar& b, double scale = 1.0);

/// Three-way comparison with the backend tolerance.
int compare(const Scalar& a, const Scalar& b, double scale = 1.0);

/// Exact square root of a non-negative rational, if it has one.
bool exact_rational_sqrt(const mpq_class& q, mpq_class& root);

}  // namespace planicheck
