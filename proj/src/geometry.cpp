#include "planicheck/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace planicheck {

namespace {

double abs_d(const Scalar& s) { return std::abs(s.to_double()); }

double max_abs_coord(std::initializer_list<const Point*> pts) {
  double m = 0.0;
  for (const Point* p : pts) m = std::max({m, abs_d(p->x), abs_d(p->y)});
  return m;
}

}  // namespace

Point::Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {
  if (x.backend() != y.backend()) {
    throw GeometryError(ErrorCode::BackendMismatch, "point coordinates in different backends");
  }
}

Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
Point operator*(const Scalar& k, const Point& p) { return {k * p.x, k * p.y}; }

Scalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
Scalar cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Scalar squared_distance(const Point& p, const Point& q) {
  const Point d = q - p;
  return dot(d, d);
}

Point midpoint(const Point& p, const Point& q) {
  const Scalar half = Scalar::like(p.x, 1) / Scalar::like(p.x, 2);
  return half * (p + q);
}

double extent(std::initializer_list<const Point*> pts) {
  double lo_x = HUGE_VAL, hi_x = -HUGE_VAL, lo_y = HUGE_VAL, hi_y = -HUGE_VAL;
  for (const Point* p : pts) {
    const double x = p->x.to_double(), y = p->y.to_double();
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  }
  return std::max(hi_x - lo_x, hi_y - lo_y);
}

bool same_point(const Point& p, const Point& q, double scale) {
  return near(p.x, q.x, scale) && near(p.y, q.y, scale);
}

Line::Line(Scalar u, Scalar v, Scalar w) : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {
  if (u_.backend() != v_.backend() || u_.backend() != w_.backend()) {
    throw GeometryError(ErrorCode::BackendMismatch, "line coefficients in different backends");
  }
  if (u_.raw_sign() == 0 && v_.raw_sign() == 0) {
    throw GeometryError(ErrorCode::Degenerate, "line with u = v = 0");
  }
}

bool Line::same_as(const Line& o, double scale) const {
  const double m = std::max({abs_d(u_), abs_d(v_), abs_d(w_)}) *
                   std::max({abs_d(o.u_), abs_d(o.v_), abs_d(o.w_)}) * scale;
  return (u_ * o.v_ - v_ * o.u_).is_zero(m) && (u_ * o.w_ - w_ * o.u_).is_zero(m) &&
         (v_ * o.w_ - w_ * o.v_).is_zero(m);
}

Line line_through(const Point& p, const Point& q) {
  const bool coincide = p.x.is_exact() ? (p.x - q.x).raw_sign() == 0 && (p.y - q.y).raw_sign() == 0
                                       : same_point(p, q, max_abs_coord({&p, &q}));
  if (coincide) throw GeometryError(ErrorCode::Degenerate, "line through coincident points");
  return Line(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y);
}

std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
  const Scalar det = l1.u() * l2.v() - l2.u() * l1.v();
  const double scale = (abs_d(l1.u()) + abs_d(l1.v())) * (abs_d(l2.u()) + abs_d(l2.v()));
  if (det.is_zero(scale)) return std::nullopt;
  return Point((l1.v() * l2.w() - l2.v() * l1.w()) / det, (l2.u() * l1.w() - l1.u() * l2.w()) / det);
}

Point foot_of_perpendicular(const Point& p, const Line& l) {
  const Scalar k = l.eval(p) / (l.u() * l.u() + l.v() * l.v());
  return {p.x - k * l.u(), p.y - k * l.v()};
}

bool point_on_line(const Point& p, const Line& l, double scale) {
  return l.eval(p).is_zero(scale * (abs_d(l.u()) + abs_d(l.v())));
}

Scalar signed_distance(const Point& p, const Line& l) {
  return l.eval(p) / (l.u() * l.u() + l.v() * l.v()).sqrt();
}

int orientation(const Point& p, const Point& q, const Point& r) {
  const double s = extent({&p, &q, &r});
  return cross(q - p, r - p).sign(s * s);
}

bool strictly_between(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  const double s = extent({&p, &a, &b});
  return dot(p - a, b - a).sign(s * s) > 0 && dot(p - b, a - b).sign(s * s) > 0;
}

AngleCos AngleCos::from_cos(const Scalar& c) {
  if (c.is_exact()) {
    const Scalar sq = c * c;
    return AngleCos(c.raw_sign() < 0 ? -sq : sq, true);
  }
  return AngleCos(c, false);
}

AngleCos AngleCos::from_dot(const Scalar& d, const Scalar& norms_sq) {
  if (norms_sq.raw_sign() <= 0) throw GeometryError(ErrorCode::Degenerate, "zero-length ray");
  if (d.is_exact()) {
    const Scalar sq = d * d / norms_sq;
    return AngleCos(d.raw_sign() < 0 ? -sq : sq, true);
  }
  const double c = std::clamp(d.to_double() / std::sqrt(norms_sq.to_double()), -1.0, 1.0);
  return AngleCos(Scalar::real(c, std::max(d.eps(), norms_sq.eps())), false);
}

double AngleCos::cos() const {
  const double k = key_.to_double();
  if (!signed_square_) return k;
  return k < 0 ? -std::sqrt(-k) : std::sqrt(k);
}

double AngleCos::radians() const { return std::acos(std::clamp(cos(), -1.0, 1.0)); }

double AngleCos::degrees() const { return radians() * 180.0 / M_PI; }

std::optional<mpq_class> AngleCos::exact_cos() const {
  if (!signed_square_) return std::nullopt;
  const mpq_class& k = key_.rational();
  mpq_class root;
  if (!exact_rational_sqrt(sgn(k) < 0 ? mpq_class(-k) : k, root)) return std::nullopt;
  if (sgn(k) < 0) root = -root;
  return root;
}

AngleCos AngleCos::supplement() const { return AngleCos(-key_, signed_square_); }

bool AngleCos::equals(const AngleCos& other) const { return near(key_, other.key_); }

AngleCos angle_cos(const Point& vertex, const Point& ray1_end, const Point& ray2_end) {
  const Point u = ray1_end - vertex;
  const Point v = ray2_end - vertex;
  const Scalar uu = dot(u, u);
  const Scalar vv = dot(v, v);
  const double s = extent({&vertex, &ray1_end, &ray2_end});
  if (same_point(vertex, ray1_end, s) || same_point(vertex, ray2_end, s)) {
    throw GeometryError(ErrorCode::Degenerate, "angle with a coincident ray end");
  }
  return AngleCos::from_dot(dot(u, v), uu * vv);
}

bool supplementary(const AngleCos& c1, const AngleCos& c2) { return c1.equals(c2.supplement()); }

bool supplementary(const Scalar& cos1, const Scalar& cos2) { return near(cos1, -cos2); }

bool collinear(const Point& a, const Point& b, const Point& c) { return orientation(a, b, c) == 0; }

Triangle::Triangle(Point a, Point b, Point c, Unchecked)
    : v_{std::move(a), std::move(b), std::move(c)} {}

Triangle::Triangle(Point a, Point b, Point c) : Triangle(std::move(a), std::move(b), std::move(c), Unchecked{}) {
  if (v_[0].backend() != v_[1].backend() || v_[0].backend() != v_[2].backend()) {
    throw GeometryError(ErrorCode::BackendMismatch, "triangle vertices in different backends");
  }
  if (collinear(v_[0], v_[1], v_[2])) {
    throw GeometryError(ErrorCode::Degenerate, "collinear triangle");
  }
}

std::optional<Triangle> Triangle::make(Point a, Point b, Point c) {
  if (a.backend() != b.backend() || a.backend() != c.backend() || collinear(a, b, c)) {
    return std::nullopt;
  }
  return Triangle(std::move(a), std::move(b), std::move(c), Unchecked{});
}

Scalar Triangle::side_sq(Vertex v) const {
  const int i = index(v);
  return squared_distance(v_[(i + 1) % 3], v_[(i + 2) % 3]);
}

AngleCos Triangle::angle(Vertex v) const {
  const int i = index(v);
  return angle_cos(v_[i], v_[(i + 1) % 3], v_[(i + 2) % 3]);
}

double Triangle::scale() const { return extent({&v_[0], &v_[1], &v_[2]}); }

Circle circumcircle(const Triangle& t) {
  const Point& a = t[0];
  const Point d0 = t[1] - a;
  const Point d1 = t[2] - a;
  const Scalar two_area = cross(d0, d1);
  const Scalar n0 = dot(d0, d0);
  const Scalar n1 = dot(d1, d1);
  const Scalar denom = Scalar::like(two_area, 2) * two_area;
  const Point center(a.x + (d1.y * n0 - d0.y * n1) / denom, a.y + (d0.x * n1 - d1.x * n0) / denom);
  return {center, squared_distance(center, a)};
}

BisectorFeet incenter_and_bisector_feet(const Triangle& t) {
  const Scalar la = t.side_sq(Vertex::A).sqrt();
  const Scalar lb = t.side_sq(Vertex::B).sqrt();
  const Scalar lc = t.side_sq(Vertex::C).sqrt();
  const Point& A = t[Vertex::A];
  const Point& B = t[Vertex::B];
  const Point& C = t[Vertex::C];
  const Scalar perimeter = la + lb + lc;
  BisectorFeet f;
  f.incenter = {(la * A.x + lb * B.x + lc * C.x) / perimeter, (la * A.y + lb * B.y + lc * C.y) / perimeter};
  f.foot_a = B + (lc / (lb + lc)) * (C - B);
  f.foot_b = A + (lc / (lc + la)) * (C - A);
  f.foot_c = A + (lb / (lb + la)) * (B - A);
  return f;
}

Line internal_bisector_line(const Triangle& t, Vertex v) {
  const BisectorFeet f = incenter_and_bisector_feet(t);
  const Point& foot = v == Vertex::A ? f.foot_a : v == Vertex::B ? f.foot_b : f.foot_c;
  return line_through(t[v], foot);
}

Scalar concyclic_determinant(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
  const Point d1 = p1 - p4, d2 = p2 - p4, d3 = p3 - p4;
  const Scalar l1 = dot(d1, d1), l2 = dot(d2, d2), l3 = dot(d3, d3);
  return d1.x * (d2.y * l3 - l2 * d3.y) - d1.y * (d2.x * l3 - l2 * d3.x) + l1 * (d2.x * d3.y - d2.y * d3.x);
}

bool concyclic(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
  const std::array<const Point*, 4> pts{&p1, &p2, &p3, &p4};
  const double s = extent({&p1, &p2, &p3, &p4});
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (same_point(*pts[i], *pts[j], s)) {
        throw GeometryError(ErrorCode::InvalidArgument, "concyclic needs four distinct points");
      }
    }
  }
  return concyclic_determinant(p1, p2, p3, p4).is_zero(s * s * s * s);
}

Point reflect(const Point& p, const Line& axis) {
  const Scalar k = Scalar::like(p.x, 2) * axis.eval(p) / (axis.u() * axis.u() + axis.v() * axis.v());
  return {p.x - k * axis.u(), p.y - k * axis.v()};
}

Triangle reflect(const Triangle& t, const Line& axis) {
  return Triangle(reflect(t[0], axis), reflect(t[1], axis), reflect(t[2], axis));
}

Isometry::Isometry(Scalar cos_t, Scalar sin_t, Point translation, bool mirror)
    : c_(std::move(cos_t)), s_(std::move(sin_t)), t_(std::move(translation)), mirror_(mirror) {
  if (!near(c_ * c_ + s_ * s_, Scalar::like(c_, 1))) {
    throw GeometryError(ErrorCode::InvalidArgument, "rotation part is not a unit pair");
  }
}

Isometry Isometry::identity(const Scalar& like) {
  return Isometry(Scalar::like(like, 1), Scalar::like(like, 0),
                  Point(Scalar::like(like, 0), Scalar::like(like, 0)), false);
}

Isometry Isometry::reflection(const Line& axis) {
  const Scalar two = Scalar::like(axis.u(), 2);
  const Scalar one = Scalar::like(axis.u(), 1);
  const Scalar n = axis.u() * axis.u() + axis.v() * axis.v();
  const Scalar m00 = one - two * axis.u() * axis.u() / n;
  const Scalar m01 = -(two * axis.u() * axis.v() / n);
  const Scalar m11 = one - two * axis.v() * axis.v() / n;
  const Scalar k = -(two * axis.w() / n);
  return from_linear({m00, m01, m01, m11}, Point(k * axis.u(), k * axis.v()));
}

std::array<Scalar, 4> Isometry::linear() const {
  if (mirror_) return {c_, s_, s_, -c_};
  return {c_, -s_, s_, c_};
}

Isometry Isometry::from_linear(const std::array<Scalar, 4>& m, Point t) {
  const bool mirror = (m[0] * m[3] - m[1] * m[2]).raw_sign() < 0;
  return Isometry(m[0], m[2], std::move(t), mirror);
}

Point Isometry::apply(const Point& p) const {
  const auto m = linear();
  return {m[0] * p.x + m[1] * p.y + t_.x, m[2] * p.x + m[3] * p.y + t_.y};
}

Triangle Isometry::apply(const Triangle& t) const {
  return Triangle(apply(t[0]), apply(t[1]), apply(t[2]));
}

Isometry Isometry::compose(const Isometry& other) const {
  const auto g = linear();
  const auto h = other.linear();
  const std::array<Scalar, 4> m{g[0] * h[0] + g[1] * h[2], g[0] * h[1] + g[1] * h[3],
                                g[2] * h[0] + g[3] * h[2], g[2] * h[1] + g[3] * h[3]};
  return from_linear(m, apply(other.t_));
}

Isometry Isometry::inverse() const {
  const auto m = linear();
  const std::array<Scalar, 4> mt{m[0], m[2], m[1], m[3]};
  const Point t(-(mt[0] * t_.x + mt[1] * t_.y), -(mt[2] * t_.x + mt[3] * t_.y));
  return from_linear(mt, t);
}

Isometry isometry_taking_segment_to_segment(const Point& p1, const Point& q1, const Point& p,
                                            const Point& q, bool mirror) {
  const Point u = q1 - p1;
  const Point v = q - p;
  const Scalar lu = dot(u, u);
  const Scalar lv = dot(v, v);
  if (!near(lu, lv, std::max(abs_d(lu), abs_d(lv)))) {
    throw GeometryError(ErrorCode::InvalidArgument, "segments differ in length");
  }
  if (lu.raw_sign() == 0) throw GeometryError(ErrorCode::Degenerate, "zero-length segment");
  const Scalar norm = lu.is_exact() ? lu : (lu * lv).sqrt();
  const Scalar c = dot(u, v) / norm;
  const Scalar s = cross(u, v) / norm;
  const Point rotated_p1(c * p1.x - s * p1.y, s * p1.x + c * p1.y);
  Isometry motion(c, s, p - rotated_p1, false);
  if (!mirror) return motion;
  return Isometry::reflection(line_through(p, q)).compose(motion);
}

}  // namespace planicheck
