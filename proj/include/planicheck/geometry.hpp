#pragma once

#include <array>
#include <initializer_list>
#include <optional>

#include "planicheck/scalar.hpp"

namespace planicheck {

struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar px, Scalar py);

  static Point real(double x, double y, double eps = kDefaultEps) {
    return {Scalar::real(x, eps), Scalar::real(y, eps)};
  }
  static Point exact(long x, long y) { return {Scalar::exact(x), Scalar::exact(y)}; }

  Backend backend() const noexcept { return x.backend(); }
};

// Points double as free vectors.
Point operator+(const Point& p, const Point& q);
Point operator-(const Point& p, const Point& q);
Point operator*(const Scalar& k, const Point& p);

Scalar dot(const Point& u, const Point& v);
Scalar cross(const Point& u, const Point& v);
Scalar squared_distance(const Point& p, const Point& q);
Point midpoint(const Point& p, const Point& q);

/// Side length of the axis-aligned bounding box, used to scale Float
/// tolerances (length ~ extent, area ~ extent^2, lift determinant ~ extent^4).
double extent(std::initializer_list<const Point*> pts);

/// Equality up to the backend tolerance, scaled by `scale`.
bool same_point(const Point& p, const Point& q, double scale = 1.0);

/// ux + vy + w = 0 with (u, v) != (0, 0).
class Line {
 public:
  Line(Scalar u, Scalar v, Scalar w);

  const Scalar& u() const { return u_; }
  const Scalar& v() const { return v_; }
  const Scalar& w() const { return w_; }

  /// Value of ux + vy + w at p; sign tells the side.
  Scalar eval(const Point& p) const { return u_ * p.x + v_ * p.y + w_; }

  /// Lines compare equal up to a nonzero common factor.
  bool same_as(const Line& other, double scale = 1.0) const;

 private:
  Scalar u_, v_, w_;
};

/// Oriented from p to q: eval() is positive to the left of p->q.
Line line_through(const Point& p, const Point& q);
std::optional<Point> line_intersection(const Line& l1, const Line& l2);
Point foot_of_perpendicular(const Point& p, const Line& l);
bool point_on_line(const Point& p, const Line& l, double scale = 1.0);
/// Float only in general; Exact when |(u,v)| is rational.
Scalar signed_distance(const Point& p, const Line& l);

/// Orientation of (p, q, r): +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

/// p strictly inside segment ab (collinear and between the endpoints).
bool strictly_between(const Point& p, const Point& a, const Point& b);

struct Circle {
  Point center;
  Scalar radius_sq;
};

enum class Vertex { A = 0, B = 1, C = 2 };

inline int index(Vertex v) { return static_cast<int>(v); }

/// Cosine of an unsigned angle in (0, pi).
///
/// Float: the cosine itself. Exact: sign(cos) * cos^2, which is rational
/// whenever the vertices are, and is monotone in the angle, so equality and
/// supplementarity stay exact comparisons.
class AngleCos {
 public:
  static AngleCos from_cos(const Scalar& c);
  /// dot = u.v, norms_sq = |u|^2 |v|^2.
  static AngleCos from_dot(const Scalar& dot, const Scalar& norms_sq);

  bool is_signed_square() const { return signed_square_; }
  const Scalar& key() const { return key_; }

  double cos() const;
  double radians() const;
  double degrees() const;
  /// The rational cosine, when the signed square has a rational root.
  std::optional<mpq_class> exact_cos() const;

  /// Cosine of pi minus this angle.
  AngleCos supplement() const;
  bool equals(const AngleCos& other) const;

 private:
  AngleCos(Scalar key, bool signed_square) : key_(std::move(key)), signed_square_(signed_square) {}
  Scalar key_;
  bool signed_square_ = false;
};

AngleCos angle_cos(const Point& vertex, const Point& ray1_end, const Point& ray2_end);

/// alpha + beta = pi for alpha, beta in (0, pi).
bool supplementary(const AngleCos& c1, const AngleCos& c2);
/// Same test on plain cosine values.
bool supplementary(const Scalar& cos1, const Scalar& cos2);

class Triangle {
 public:
  Triangle(Point a, Point b, Point c);
  /// Non-throwing variant; nullopt for collinear input.
  static std::optional<Triangle> make(Point a, Point b, Point c);

  const Point& operator[](Vertex v) const { return v_[index(v)]; }
  const Point& operator[](int i) const { return v_[i]; }
  const std::array<Point, 3>& vertices() const { return v_; }
  Backend backend() const { return v_[0].backend(); }

  /// Squared length of the side opposite `v`.
  Scalar side_sq(Vertex v) const;
  AngleCos angle(Vertex v) const;
  double scale() const;

 private:
  struct Unchecked {};
  Triangle(Point a, Point b, Point c, Unchecked);
  std::array<Point, 3> v_;
};

bool collinear(const Point& a, const Point& b, const Point& c);

Circle circumcircle(const Triangle& t);

struct BisectorFeet {
  Point incenter;  // J
  Point foot_a;    // A1 on BC
  Point foot_b;    // B1 on CA
  Point foot_c;    // C1 on AB
};

/// Needs the side lengths, so the Exact backend requires rational sides.
BisectorFeet incenter_and_bisector_feet(const Triangle& t);
Line internal_bisector_line(const Triangle& t, Vertex v);

Scalar concyclic_determinant(const Point& p1, const Point& p2, const Point& p3, const Point& p4);
bool concyclic(const Point& p1, const Point& p2, const Point& p3, const Point& p4);

Point reflect(const Point& p, const Line& axis);
Triangle reflect(const Triangle& t, const Line& axis);

/// x -> R(theta) * M * x + t, M = diag(1, -1) when mirrored.
class Isometry {
 public:
  Isometry(Scalar cos_t, Scalar sin_t, Point translation, bool mirror);
  static Isometry identity(const Scalar& like);
  static Isometry reflection(const Line& axis);

  const Scalar& cos_theta() const { return c_; }
  const Scalar& sin_theta() const { return s_; }
  const Point& translation() const { return t_; }
  bool mirror() const { return mirror_; }

  Point apply(const Point& p) const;
  Triangle apply(const Triangle& t) const;
  /// (*this)(other(x)).
  Isometry compose(const Isometry& other) const;
  Isometry inverse() const;

 private:
  // linear part as a 2x2 matrix [[m00, m01], [m10, m11]]
  std::array<Scalar, 4> linear() const;
  static Isometry from_linear(const std::array<Scalar, 4>& m, Point t);

  Scalar c_, s_;
  Point t_;
  bool mirror_;
};

/// Rigid motion mapping p1 -> p and q1 -> q (|p1q1| must equal |pq|),
/// followed by the reflection in line pq when `mirror` is set.
Isometry isometry_taking_segment_to_segment(const Point& p1, const Point& q1, const Point& p,
                                            const Point& q, bool mirror);

}  // namespace planicheck
