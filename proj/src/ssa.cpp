#include "planicheck/ssa.hpp"

#include <algorithm>
#include <cmath>

namespace planicheck {

SsaSpec SsaSpec::from_float(double side_a, double side_b, double theta_rad, double eps) {
  if (!(side_a > 0.0) || !(side_b > 0.0) || !std::isfinite(side_a) || !std::isfinite(side_b)) {
    throw GeometryError(ErrorCode::InvalidArgument, "SSA side lengths must be positive");
  }
  if (!(theta_rad > 0.0 && theta_rad < M_PI)) {
    throw GeometryError(ErrorCode::InvalidArgument, "SSA angle must lie in (0, pi)");
  }
  return {Scalar::real(side_a * side_a, eps), Scalar::real(side_b, eps),
          Scalar::real(std::cos(theta_rad), eps), Scalar::real(std::sin(theta_rad), eps)};
}

SsaSpec SsaSpec::from_exact(mpq_class side_a_sq, mpq_class side_b, mpq_class cos_theta,
                            mpq_class sin_theta) {
  if (sgn(side_a_sq) <= 0 || sgn(side_b) <= 0) {
    throw GeometryError(ErrorCode::InvalidArgument, "SSA side lengths must be positive");
  }
  if (sgn(sin_theta) <= 0 || cos_theta * cos_theta + sin_theta * sin_theta != 1) {
    throw GeometryError(ErrorCode::InvalidArgument, "SSA direction must be a unit vector with sin > 0");
  }
  return {Scalar::exact(std::move(side_a_sq)), Scalar::exact(std::move(side_b)),
          Scalar::exact(std::move(cos_theta)), Scalar::exact(std::move(sin_theta))};
}

double SsaSpec::scale() const {
  return std::max(std::sqrt(side_a_sq.to_double()), side_b.to_double());
}

namespace {

struct Discriminant {
  Scalar value;  // a^2 - b^2 sin^2
  int sign;
  double scale_sq;
};

Discriminant discriminant(const SsaSpec& s) {
  const Scalar b2 = s.side_b * s.side_b;
  const double scale_sq = std::max(s.side_a_sq.to_double(), b2.to_double());
  Scalar d = s.side_a_sq - b2 * s.sin_theta * s.sin_theta;
  const int sign = d.sign(scale_sq);
  return {std::move(d), sign, scale_sq};
}

}  // namespace

int ssa_solution_count(const SsaSpec& spec) {
  const Discriminant d = discriminant(spec);
  if (d.sign < 0) return 0;
  const bool acute = spec.cos_theta.sign() > 0;
  if (d.sign == 0) return acute ? 1 : 0;
  const int a_vs_b = compare(spec.side_a_sq, spec.side_b * spec.side_b, d.scale_sq);
  const int far_root = (acute || a_vs_b > 0) ? 1 : 0;
  const int near_root = (acute && a_vs_b < 0) ? 1 : 0;
  return far_root + near_root;
}

SsaSolutions solve_ssa(const SsaSpec& spec) {
  SsaSolutions out;
  const int count = ssa_solution_count(spec);
  if (count == 0) return out;

  const Discriminant d = discriminant(spec);
  const Scalar zero = Scalar::like(spec.side_b, 0);
  const Scalar root = d.sign == 0 ? zero : d.value.sqrt();
  const Scalar mid = spec.side_b * spec.cos_theta;

  std::vector<Scalar> third_sides;
  if (count == 2) third_sides.push_back(mid - root);
  third_sides.push_back(mid + root);

  const Point v(zero, zero);
  const Point w(spec.side_b, zero);
  for (const Scalar& x : third_sides) {
    if (auto t = Triangle::make(v, w, Point(x * spec.cos_theta, x * spec.sin_theta))) {
      out.triangles.push_back(std::move(*t));
    }
  }
  return out;
}

const char* to_string(CriterionCase c) {
  switch (c) {
    case CriterionCase::IncludedAngle: return "IncludedAngle";
    case CriterionCase::IsoscelesEqualSides: return "IsoscelesEqualSides";
    case CriterionCase::AngleOppositeGreater: return "AngleOppositeGreater";
    case CriterionCase::AngleOppositeSmaller: return "AngleOppositeSmaller";
  }
  return "?";
}

CriterionCase predict_case(const SsaCaseQuery& q) {
  if (q.angle == AnglePlacement::Included) return CriterionCase::IncludedAngle;
  const double scale = std::max(std::abs(q.first_side_sq.to_double()), std::abs(q.second_side_sq.to_double()));
  const int cmp = compare(q.first_side_sq, q.second_side_sq, scale);
  if (cmp == 0) return CriterionCase::IsoscelesEqualSides;
  const bool opposite_first_is_greater = cmp > 0;
  const bool opposite_greater =
      q.angle == AnglePlacement::OppositeFirst ? opposite_first_is_greater : !opposite_first_is_greater;
  return opposite_greater ? CriterionCase::AngleOppositeGreater : CriterionCase::AngleOppositeSmaller;
}

std::optional<Vertex> SsaMatch::remaining() const {
  if (side_1 == side_2) return std::nullopt;
  if (angle_at == side_1) return side_2;
  if (angle_at == side_2) return side_1;
  return std::nullopt;
}

const char* verdict_name(const DichotomyVerdict& v) {
  return std::visit(
      [](const auto& x) -> const char* {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Congruent>) return "Congruent";
        else if constexpr (std::is_same_v<T, Supplementary>) return "Supplementary";
        else return "NotSsaMatched";
      },
      v);
}

DichotomyVerdict classify_pair(const Triangle& t1, const Triangle& t2, const Correspondence& corr,
                               const SsaMatch& match) {
  if (match.side_1 == match.side_2) {
    throw GeometryError(ErrorCode::InvalidArgument, "SSA match needs two distinct sides");
  }
  const TriangleElements e1 = TriangleElements::of(t1);
  const TriangleElements e2 = TriangleElements::of(t2);
  const bool matched = same_length_sq(e1.side(match.side_1), e2.side(corr(match.side_1))) &&
                       same_length_sq(e1.side(match.side_2), e2.side(corr(match.side_2))) &&
                       e1.angle(match.angle_at).equals(e2.angle(corr(match.angle_at)));
  if (!matched) return NotSsaMatched{};

  if (auto c = congruent_any(t1, t2)) return Congruent{*c};

  const auto rem = match.remaining();
  if (!rem) {
    throw DichotomyViolation(ErrorCode::Precondition,
                             "included-angle match between non-congruent triangles");
  }
  const AngleCos& c1 = e1.angle(*rem);
  const AngleCos& c2 = e2.angle(corr(*rem));
  if (!supplementary(c1, c2)) {
    throw DichotomyViolation(ErrorCode::Precondition,
                             "matched non-congruent pair without supplementary remaining angles");
  }
  return Supplementary{c1, c2};
}

const char* to_string(LemmaPrecondition p) {
  switch (p) {
    case LemmaPrecondition::NoCommonSide: return "triangles do not share side AB";
    case LemmaPrecondition::Congruent: return "triangles are congruent";
    case LemmaPrecondition::UnequalSides: return "AC != AD";
    case LemmaPrecondition::UnequalAngles: return "angle ABC != angle ABD";
  }
  return "?";
}

LemmaPreconditionError::LemmaPreconditionError(LemmaPrecondition which)
    : GeometryError(ErrorCode::Precondition, to_string(which)), which_(which) {}

LemmaReport lemma_common_side_check(const Triangle& abc, const Triangle& abd) {
  const Point& a = abc[0];
  const Point& b = abc[1];
  const Point& c = abc[2];
  const Point& d = abd[2];
  const double scale = extent({&a, &b, &c, &d});
  if (!same_point(abd[0], a, scale) || !same_point(abd[1], b, scale)) {
    throw LemmaPreconditionError(LemmaPrecondition::NoCommonSide);
  }
  const Scalar ac = squared_distance(a, c);
  if (!same_length_sq(ac, squared_distance(a, d))) {
    throw LemmaPreconditionError(LemmaPrecondition::UnequalSides);
  }
  if (!angle_cos(b, a, c).equals(angle_cos(b, a, d))) {
    throw LemmaPreconditionError(LemmaPrecondition::UnequalAngles);
  }
  if (congruent_any(abc, abd)) throw LemmaPreconditionError(LemmaPrecondition::Congruent);

  LemmaReport r{angle_cos(c, a, b), angle_cos(d, a, b)};
  r.supplementary = supplementary(r.cos_at_c, r.cos_at_d);
  r.opposite_sides = orientation(a, b, c) * orientation(a, b, d) < 0;
  r.concyclic_det = concyclic_determinant(a, c, b, d);
  if (r.opposite_sides) r.concyclic = concyclic(a, c, b, d);
  r.side_inequality = compare(ac, squared_distance(a, b), scale * scale) < 0;
  return r;
}

CommonSidePair to_common_side(const Triangle& t1, const Triangle& t2, const Correspondence& corr,
                              Vertex u, Vertex w, Placement placement) {
  if (u == w) throw GeometryError(ErrorCode::InvalidArgument, "common side needs two distinct vertices");
  const Point& p = t1[u];
  const Point& q = t1[w];
  Isometry motion = isometry_taking_segment_to_segment(t2[corr(u)], t2[corr(w)], p, q, false);
  Triangle moved = motion.apply(t2);

  const Vertex third = static_cast<Vertex>(3 - index(u) - index(w));
  const int side_1 = orientation(p, q, t1[third]);
  const int side_2 = orientation(p, q, moved[corr(third)]);
  const bool want_same = placement == Placement::SameSide;
  if ((side_1 == side_2) != want_same) {
    motion = Isometry::reflection(line_through(p, q)).compose(motion);
    moved = motion.apply(t2);
  }
  return {t1, moved, motion};
}

}  // namespace planicheck
