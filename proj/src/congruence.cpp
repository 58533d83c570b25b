#include "planicheck/congruence.hpp"

#include <algorithm>
#include <cmath>

namespace planicheck {

TriangleElements TriangleElements::of(const Triangle& t) {
  return {{t.side_sq(Vertex::A), t.side_sq(Vertex::B), t.side_sq(Vertex::C)},
          {t.angle(Vertex::A), t.angle(Vertex::B), t.angle(Vertex::C)}};
}

Correspondence::Correspondence(std::array<int, 3> map) : map_(map) {
  std::array<int, 3> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) {
    throw GeometryError(ErrorCode::InvalidArgument, "correspondence is not a permutation");
  }
}

const std::array<Correspondence, 6>& Correspondence::all() {
  static const std::array<Correspondence, 6> perms = [] {
    std::array<Correspondence, 6> out;
    std::array<int, 3> p{0, 1, 2};
    int i = 0;
    do {
      out[i++] = Correspondence(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

Correspondence Correspondence::inverse() const {
  std::array<int, 3> inv{};
  for (int i = 0; i < 3; ++i) inv[map_[i]] = i;
  return Correspondence(inv);
}

bool same_length_sq(const Scalar& l1, const Scalar& l2) {
  return near(l1, l2, std::max(std::abs(l1.to_double()), std::abs(l2.to_double())));
}

namespace {

constexpr std::array<Vertex, 3> kVertices{Vertex::A, Vertex::B, Vertex::C};

bool side_matches(const TriangleElements& t1, const TriangleElements& t2, const Correspondence& corr,
                  Vertex v) {
  return same_length_sq(t1.side(v), t2.side(corr(v)));
}

bool angle_matches(const TriangleElements& t1, const TriangleElements& t2, const Correspondence& corr,
                   Vertex v) {
  return t1.angle(v).equals(t2.angle(corr(v)));
}

Vertex next(Vertex v, int k) { return static_cast<Vertex>((index(v) + k) % 3); }

}  // namespace

bool criterion_a(const TriangleElements& t1, const TriangleElements& t2, const Correspondence& corr) {
  // The sides enclosing the angle at v are the ones opposite the other two vertices.
  return std::any_of(kVertices.begin(), kVertices.end(), [&](Vertex v) {
    return angle_matches(t1, t2, corr, v) && side_matches(t1, t2, corr, next(v, 1)) &&
           side_matches(t1, t2, corr, next(v, 2));
  });
}

bool criterion_b(const TriangleElements& t1, const TriangleElements& t2, const Correspondence& corr) {
  int equal_angles = 0;
  for (Vertex v : kVertices) equal_angles += angle_matches(t1, t2, corr, v) ? 1 : 0;
  if (equal_angles < 2) return false;
  return std::any_of(kVertices.begin(), kVertices.end(),
                     [&](Vertex v) { return side_matches(t1, t2, corr, v); });
}

bool criterion_c(const TriangleElements& t1, const TriangleElements& t2, const Correspondence& corr) {
  return std::all_of(kVertices.begin(), kVertices.end(),
                     [&](Vertex v) { return side_matches(t1, t2, corr, v); });
}

CriterionResult criterion_d(const TriangleElements& t1, const TriangleElements& t2,
                            const Correspondence& corr) {
  bool ambiguous = false;
  for (Vertex u : kVertices) {
    if (!angle_matches(t1, t2, corr, u) || !side_matches(t1, t2, corr, u)) continue;
    for (int k = 1; k <= 2; ++k) {
      const Vertex w = next(u, k);
      if (!side_matches(t1, t2, corr, w)) continue;
      // the angle at u is opposite side(u); it must be the strictly greater one
      const Scalar& opposite = t1.side(u);
      const Scalar& other = t1.side(w);
      const double scale = std::max(std::abs(opposite.to_double()), std::abs(other.to_double()));
      if (compare(opposite, other, scale) > 0) return CriterionResult::Holds;
      ambiguous = true;
    }
  }
  return ambiguous ? CriterionResult::NotApplicable : CriterionResult::Fails;
}

std::optional<Correspondence> congruent_any(const Triangle& t1, const Triangle& t2) {
  const TriangleElements e1 = TriangleElements::of(t1);
  const TriangleElements e2 = TriangleElements::of(t2);
  for (const Correspondence& corr : Correspondence::all()) {
    if (criterion_c(e1, e2, corr)) return corr;
  }
  return std::nullopt;
}

}  // namespace planicheck
