#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "planicheck/congruence.hpp"
#include "planicheck/geometry.hpp"

namespace planicheck {

/// Two sides and a non-included angle: side_a is opposite the angle theta,
/// side_b is adjacent to it.
///
/// Canonical pose: the angle vertex V sits at the origin, the far end W of
/// side_b at (side_b, 0), and the apex X on the ray at angle theta in the
/// upper half-plane with |WX| = side_a. Vertex labels are (A, B, C) = (V, W, X).
struct SsaSpec {
  Scalar side_a_sq;
  Scalar side_b;
  Scalar cos_theta;
  Scalar sin_theta;

  static SsaSpec from_float(double side_a, double side_b, double theta_rad, double eps = kDefaultEps);
  /// (cos_theta, sin_theta) must be a rational unit vector with sin_theta > 0.
  static SsaSpec from_exact(mpq_class side_a_sq, mpq_class side_b, mpq_class cos_theta,
                            mpq_class sin_theta);

  Backend backend() const { return side_b.backend(); }
  double scale() const;
};

struct SsaSolutions {
  /// 0, 1 or 2 triangles in canonical pose, ascending by the third side VX.
  std::vector<Triangle> triangles;
};

/// Number of triangles the spec admits; decided without square roots.
int ssa_solution_count(const SsaSpec& spec);

/// Exact backend throws NotRepresentable when the apex needs an irrational root.
SsaSolutions solve_ssa(const SsaSpec& spec);

enum class CriterionCase { IncludedAngle, IsoscelesEqualSides, AngleOppositeGreater, AngleOppositeSmaller };

const char* to_string(CriterionCase c);

enum class AnglePlacement { Included, OppositeFirst, OppositeSecond };

struct SsaCaseQuery {
  Scalar first_side_sq;
  Scalar second_side_sq;
  AnglePlacement angle;
};

CriterionCase predict_case(const SsaCaseQuery& query);

/// Which elements two triangles are claimed to share: the sides opposite
/// `side_1` and `side_2` and the angle at `angle_at` (labels of the first
/// triangle; the correspondence maps them into the second).
struct SsaMatch {
  Vertex side_1;
  Vertex side_2;
  Vertex angle_at;

  /// The match produced by solve_ssa's canonical pose: sides a (opposite V)
  /// and b (opposite X), angle at V.
  static SsaMatch canonical() { return {Vertex::A, Vertex::C, Vertex::A}; }
  /// The vertex whose angle is neither given nor included between the sides.
  std::optional<Vertex> remaining() const;
};

struct Congruent {
  Correspondence corr;
};

struct Supplementary {
  AngleCos cos_1;
  AngleCos cos_2;
};

struct NotSsaMatched {};

using DichotomyVerdict = std::variant<Congruent, Supplementary, NotSsaMatched>;

const char* verdict_name(const DichotomyVerdict& v);

/// Raised when a matched, non-congruent pair fails the supplementary test.
class DichotomyViolation : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

DichotomyVerdict classify_pair(const Triangle& t1, const Triangle& t2, const Correspondence& corr,
                               const SsaMatch& match);

/// Triangles ABC and ABD with the common side AB (vertices 0 and 1 shared).
struct LemmaReport {
  AngleCos cos_at_c;
  AngleCos cos_at_d;
  bool supplementary = false;
  bool opposite_sides = false;
  /// Only meaningful when C and D lie on opposite sides of AB.
  std::optional<bool> concyclic;
  Scalar concyclic_det;
  bool side_inequality = false;  // AC < AB
};

enum class LemmaPrecondition { NoCommonSide, Congruent, UnequalSides, UnequalAngles };

const char* to_string(LemmaPrecondition p);

class LemmaPreconditionError : public GeometryError {
 public:
  explicit LemmaPreconditionError(LemmaPrecondition which);
  LemmaPrecondition which() const noexcept { return which_; }

 private:
  LemmaPrecondition which_;
};

LemmaReport lemma_common_side_check(const Triangle& abc, const Triangle& abd);

enum class Placement { SameSide, OppositeSide };

struct CommonSidePair {
  Triangle first;
  Triangle second;
  Isometry motion;
};

/// Moves t2 so that its side corr(u) corr(w) lands on t1's side u w pointwise,
/// with the remaining vertex on the requested side relative to t1's third vertex.
CommonSidePair to_common_side(const Triangle& t1, const Triangle& t2, const Correspondence& corr,
                              Vertex u, Vertex w, Placement placement);

}  // namespace planicheck
