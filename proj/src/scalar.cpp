#include "planicheck/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace planicheck {

Scalar Scalar::exact(mpq_class q) {
  q.canonicalize();
  Scalar s;
  s.value_ = std::move(q);
  s.eps_ = 0.0;
  return s;
}

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw GeometryError(ErrorCode::InvalidArgument, "zero denominator");
  return exact(mpq_class(num, den));
}

Scalar Scalar::exact(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw GeometryError(ErrorCode::InvalidArgument, "not a rational: " + std::string(text));
  }
  return exact(std::move(q));
}

Scalar Scalar::real(double v, double eps) {
  if (!(eps > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "eps must be positive");
  if (!std::isfinite(v)) throw GeometryError(ErrorCode::InvalidArgument, "non-finite value");
  Scalar s;
  s.value_ = v;
  s.eps_ = eps;
  return s;
}

Scalar Scalar::like(const Scalar& like, long n) {
  return like.is_exact() ? exact(n) : real(static_cast<double>(n), like.eps_);
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw GeometryError(ErrorCode::BackendMismatch, "rational() on a Float scalar");
  return std::get<mpq_class>(value_);
}

double Scalar::to_double() const {
  if (const auto* d = std::get_if<double>(&value_)) return *d;
  return std::get<mpq_class>(value_).get_d();
}

int Scalar::raw_sign() const {
  if (const auto* d = std::get_if<double>(&value_)) return (*d > 0) - (*d < 0);
  return sgn(std::get<mpq_class>(value_));
}

int Scalar::sign(double scale) const {
  if (const auto* d = std::get_if<double>(&value_)) {
    if (std::abs(*d) <= eps_ * scale) return 0;
    return *d > 0 ? 1 : -1;
  }
  return sgn(std::get<mpq_class>(value_));
}

Scalar Scalar::abs() const { return raw_sign() < 0 ? -*this : *this; }

Scalar Scalar::sqrt() const {
  if (raw_sign() < 0) throw GeometryError(ErrorCode::InvalidArgument, "sqrt of a negative value");
  if (const auto* d = std::get_if<double>(&value_)) return real(std::sqrt(*d), eps_);
  mpq_class root;
  if (!exact_rational_sqrt(std::get<mpq_class>(value_), root)) {
    throw GeometryError(ErrorCode::NotRepresentable,
                        "square root of " + to_string() + " is not rational");
  }
  return exact(std::move(root));
}

void Scalar::check_same(const Scalar& o) const {
  if (backend() != o.backend()) {
    throw GeometryError(ErrorCode::BackendMismatch, "mixed Exact/Float arithmetic");
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto* d = std::get_if<double>(&r.value_)) {
    *d = -*d;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto* d = std::get_if<double>(&value_)) {
    *d += std::get<double>(o.value_);
    eps_ = std::max(eps_, o.eps_);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (auto* d = std::get_if<double>(&value_)) {
    *d -= std::get<double>(o.value_);
    eps_ = std::max(eps_, o.eps_);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto* d = std::get_if<double>(&value_)) {
    *d *= std::get<double>(o.value_);
    eps_ = std::max(eps_, o.eps_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.raw_sign() == 0) throw GeometryError(ErrorCode::Degenerate, "division by zero");
  if (auto* d = std::get_if<double>(&value_)) {
    *d /= std::get<double>(o.value_);
    eps_ = std::max(eps_, o.eps_);
  } else {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
  }
  return *this;
}

std::string Scalar::to_string() const {
  if (const auto* d = std::get_if<double>(&value_)) {
    std::ostringstream os;
    os.precision(17);
    os << *d;
    return os.str();
  }
  return std::get<mpq_class>(value_).get_str();
}

bool near(const Scalar& a, const Scalar& b, double scale) { return compare(a, b, scale) == 0; }

int compare(const Scalar& a, const Scalar& b, double scale) { return (a - b).sign(scale); }

bool exact_rational_sqrt(const mpq_class& q, mpq_class& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = mpq_class(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace planicheck
