#pragma once

// Branch-free kernel bodies, instantiated with V = double (reference) and with
// the vector lane types. Operation order is part of the contract: the scalar
// and vector variants must agree bitwise, so no FMA contraction and no
// reassociation.

#include "kernels/lanes.hpp"

namespace planicheck::kernels::formulas {

using namespace lanes;

template <class V>
struct Apex {
  V x, y;
};

// C for A = (0,0), B = (1,0) and base angles alpha, beta.
template <class V>
inline Apex<V> apex(V ca, V sa, V cb, V sb) {
  const V s = sa * cb + ca * sb;
  return {ca * sb / s, sa * sb / s};
}

template <class V>
inline V norm(V x, V y) {
  return sqrt(x * x + y * y);
}

template <class V>
inline V cos_between(V ux, V uy, V vx, V vy) {
  return (ux * vx + uy * vy) / (norm(ux, uy) * norm(vx, vy));
}

// Signed distance from the circumcenter G of the medial triangle to the
// internal bisector of the angle at C.
template <class V>
inline V medial_circumcenter(V ca, V sa, V cb, V sb, V) {
  const Apex<V> c = apex(ca, sa, cb, sb);
  const V half(0.5);
  const V one(1.0);
  const V la = norm(one - c.x, V(0.0) - c.y);
  const V lb = norm(c.x, c.y);
  // F = (B + C)/2, D = C/2, E = (1/2, 0)
  const V fx = (one + c.x) * half, fy = c.y * half;
  const V dx = c.x * half, dy = c.y * half;
  const V ex = half, ey(0.0);
  const V d0x = dx - fx, d0y = dy - fy;
  const V d1x = ex - fx, d1y = ey - fy;
  const V two_area = d0x * d1y - d0y * d1x;
  const V n0 = d0x * d0x + d0y * d0y;
  const V n1 = d1x * d1x + d1y * d1y;
  const V denom = V(2.0) * two_area;
  const V gx = fx + (d1y * n0 - d0y * n1) / denom;
  const V gy = fy + (d0x * n1 - d1x * n0) / denom;
  // bisector direction: unit(A - C) + unit(B - C)
  const V ux = (V(0.0) - c.x) / lb + (one - c.x) / la;
  const V uy = (V(0.0) - c.y) / lb + (V(0.0) - c.y) / la;
  return (ux * (gy - c.y) - uy * (gx - c.x)) / norm(ux, uy);
}

// JA1^2 - JB1^2 with J the incenter, A1 and B1 the bisector feet on BC and CA.
template <class V>
inline V incenter_segments(V ca, V sa, V cb, V sb, V) {
  const Apex<V> c = apex(ca, sa, cb, sb);
  const V one(1.0);
  const V la = norm(one - c.x, V(0.0) - c.y);
  const V lb = norm(c.x, c.y);
  const V per = la + lb + one;
  const V jx = (lb + c.x) / per;
  const V jy = c.y / per;
  const V ka = one / (lb + one);
  const V a1x = one + (c.x - one) * ka, a1y = c.y * ka;
  const V kb = one / (la + one);
  const V b1x = c.x * kb, b1y = c.y * kb;
  const V ax = jx - a1x, ay = jy - a1y;
  const V bx = jx - b1x, by = jy - b1y;
  return (ax * ax + ay * ay) - (bx * bx + by * by);
}

// cos(ACO) - cos(BCO), O the center of the inscribed rectangle with two
// vertices on AB at height t*h (h the altitude from C).
template <class V>
inline V rectangle_center_at(const Apex<V>& c, V t) {
  const V one(1.0);
  const V la = norm(one - c.x, V(0.0) - c.y);
  const V lb = norm(c.x, c.y);
  const V qx = c.x * t;
  const V px = one + (c.x - one) * t;
  const V ox = (qx + px) * V(0.5);
  const V oy = c.y * t * V(0.5);
  const V ocx = ox - c.x, ocy = oy - c.y;
  const V oc = norm(ocx, ocy);
  const V cos_a = ((V(0.0) - c.x) * ocx + (V(0.0) - c.y) * ocy) / (lb * oc);
  const V cos_b = ((one - c.x) * ocx + (V(0.0) - c.y) * ocy) / (la * oc);
  return cos_a - cos_b;
}

template <class V>
inline V rectangle_center(V ca, V sa, V cb, V sb, V t) {
  return rectangle_center_at(apex(ca, sa, cb, sb), t);
}

// The square: side s = h/(1 + h) for AB = 1, so t = s/h = 1/(1 + h).
template <class V>
inline V square_center(V ca, V sa, V cb, V sb, V) {
  const Apex<V> c = apex(ca, sa, cb, sb);
  return rectangle_center_at(c, V(1.0) / (V(1.0) + c.y));
}

// cos(BB1A1) - cos(30 deg).
template <class V>
inline V bisector_30(V ca, V sa, V cb, V sb, V) {
  const Apex<V> c = apex(ca, sa, cb, sb);
  const V one(1.0);
  const V la = norm(one - c.x, V(0.0) - c.y);
  const V lb = norm(c.x, c.y);
  const V ka = one / (lb + one);
  const V a1x = one + (c.x - one) * ka, a1y = c.y * ka;
  const V kb = one / (la + one);
  const V b1x = c.x * kb, b1y = c.y * kb;
  return cos_between(one - b1x, V(0.0) - b1y, a1x - b1x, a1y - b1y) - V(0.86602540378443864676);
}

template <class V>
struct SsaLane {
  V count, lo, hi, cos_lo, cos_hi;
};

// Cosine of the apex angle at X = x (c, s) in the canonical pose V = (0,0),
// W = (b, 0), in the same operation order as angle_cos(X, V, W).
template <class V>
inline V apex_cos(V b, V c, V s, V x) {
  const V xx = x * c, xy = x * s;
  const V ux = V(0.0) - xx, uy = V(0.0) - xy;
  const V vx = b - xx, vy = V(0.0) - xy;
  const V uu = ux * ux + uy * uy;
  const V vv = vx * vx + vy * vy;
  const V cs = (ux * vx + uy * vy) / sqrt(uu * vv);
  return min(max(cs, V(-1.0)), V(1.0));
}

// Mirrors ssa_solution_count / solve_ssa for the Float backend.
template <class V>
inline SsaLane<V> ssa(V a, V b, V c, V s, V eps) {
  const V a2 = a * a;
  const V b2 = b * b;
  const V scale2 = max(a2, b2);
  const V disc = a2 - b2 * s * s;
  const V tol = eps * scale2;
  const auto zero = le(abs(disc), tol);
  const auto pos = gt(disc, tol);
  const auto acute_pos = gt(c, eps);
  const V ab = a2 - b2;
  const auto a_gt_b = gt(ab, tol);
  const auto a_lt_b = lt(ab, V(0.0) - tol);

  const V root = select(pos, sqrt(max(disc, V(0.0))), V(0.0));
  const V mid = b * c;
  const V x_lo = mid - root;
  const V x_hi = mid + root;

  const auto hi_valid = either(both(zero, acute_pos), both(pos, either(acute_pos, a_gt_b)));
  const auto lo_valid = both(pos, both(acute_pos, a_lt_b));

  const V nan(__builtin_nan(""));
  SsaLane<V> r;
  r.count = as_unit(hi_valid) + as_unit(lo_valid);
  r.hi = select(hi_valid, x_hi, nan);
  r.lo = select(lo_valid, x_lo, nan);
  r.cos_hi = select(hi_valid, apex_cos(b, c, s, x_hi), nan);
  r.cos_lo = select(lo_valid, apex_cos(b, c, s, x_lo), nan);
  return r;
}

}  // namespace planicheck::kernels::formulas
