#pragma once

#include <array>
#include <optional>
#include <vector>

#include "planicheck/geometry.hpp"

namespace planicheck {

/// Squared sides and angle cosines, both keyed by the opposite / own vertex:
/// side_sq[A] = BC^2 = a^2, cos[A] = cos of the angle at A.
struct TriangleElements {
  std::array<Scalar, 3> side_sq;
  std::array<AngleCos, 3> cos;

  static TriangleElements of(const Triangle& t);

  const Scalar& side(Vertex v) const { return side_sq[index(v)]; }
  const AngleCos& angle(Vertex v) const { return cos[index(v)]; }
};

/// Bijection from the vertex labels of one triangle to those of another.
class Correspondence {
 public:
  constexpr Correspondence() : map_{0, 1, 2} {}
  explicit Correspondence(std::array<int, 3> map);

  static Correspondence identity() { return {}; }
  /// The six permutations in lexicographic order.
  static const std::array<Correspondence, 6>& all();

  Vertex operator()(Vertex v) const { return static_cast<Vertex>(map_[index(v)]); }
  const std::array<int, 3>& map() const { return map_; }
  Correspondence inverse() const;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

 private:
  std::array<int, 3> map_;
};

/// Outcome of Criterion D, which distinguishes "the matched angle is opposite
/// the smaller side" from plain failure.
enum class CriterionResult { Holds, Fails, NotApplicable };

/// Two sides and the included angle.
bool criterion_a(const TriangleElements& t1, const TriangleElements& t2, const Correspondence& corr);
/// Two angles and a side.
bool criterion_b(const TriangleElements& t1, const TriangleElements& t2, const Correspondence& corr);
/// Three sides.
bool criterion_c(const TriangleElements& t1, const TriangleElements& t2, const Correspondence& corr);
/// Two sides and the angle opposite the greater one.
CriterionResult criterion_d(const TriangleElements& t1, const TriangleElements& t2,
                            const Correspondence& corr);

/// First correspondence (lexicographic) under which all three sides match.
std::optional<Correspondence> congruent_any(const Triangle& t1, const Triangle& t2);

/// Length tolerance scale for comparing two squared sides.
bool same_length_sq(const Scalar& l1, const Scalar& l2);

}  // namespace planicheck
