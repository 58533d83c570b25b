#include "planicheck/suites.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <sstream>

namespace planicheck {

namespace {

constexpr double kPi = M_PI;
constexpr double kDeg = kPi / 180.0;
constexpr std::size_t kMaxWitnesses = 5;

std::string fmt(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& [k, v] : fields) {
    if (!first) os << ' ';
    first = false;
    os << k << '=' << v;
  }
  return os.str();
}

std::string fmt_q(const RationalSsa& r) {
  return "a^2=" + r.side_a_sq.get_str() + " b=" + r.side_b.get_str() + " cos=" + r.cos_theta.get_str() +
         " sin=" + r.sin_theta.get_str();
}

bool same_bits(double x, double y) { return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y); }

Triangle mirror_in_base(const Triangle& t) {
  return reflect(t, line_through(t[Vertex::A], t[Vertex::B]));
}

}  // namespace

void CheckResult::fail(std::string witness) {
  pass = false;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

std::vector<OracleSolution> law_of_sines_oracle(double side_a, double side_b, double theta) {
  // sin(X) / side_b = sin(theta) / side_a, X the angle opposite side_b
  const double sin_x = side_b * std::sin(theta) / side_a;
  std::vector<OracleSolution> out;
  if (sin_x > 1.0) return out;
  const double acute = std::asin(sin_x);
  // larger far angle first means the shorter third side first
  for (double x : {kPi - acute, acute}) {
    const double far = kPi - theta - x;
    if (far > 0.0 && !(out.size() == 1 && x == out[0].apex_angle)) out.push_back({x, far});
  }
  return out;
}

SsaSpec RationalSsa::exact() const { return SsaSpec::from_exact(side_a_sq, side_b, cos_theta, sin_theta); }

SsaSpec RationalSsa::as_float(double eps) const {
  return SsaSpec{Scalar::real(side_a_sq.get_d(), eps), Scalar::real(side_b.get_d(), eps),
                 Scalar::real(cos_theta.get_d(), eps), Scalar::real(sin_theta.get_d(), eps)};
}

RationalSsa random_two_solution_rational(Rng& rng) {
  // direction (q^2 - p^2, 2pq) / (q^2 + p^2) with p < q keeps the angle acute
  const long q = rng.integer(2, 40);
  const long p = rng.integer(1, q - 1);
  RationalSsa r;
  r.cos_theta = mpq_class(q * q - p * p, q * q + p * p);
  r.sin_theta = mpq_class(2 * p * q, q * q + p * p);
  r.cos_theta.canonicalize();
  r.sin_theta.canonicalize();
  const long den = rng.integer(1, 12);
  const long lo = rng.integer(1, 119);
  const long hi = rng.integer(lo + 1, 120);
  r.x_lo = mpq_class(lo, den);
  r.x_hi = mpq_class(hi, den);
  r.x_lo.canonicalize();
  r.x_hi.canonicalize();
  // third sides solve x^2 - 2 b cos x + (b^2 - a^2) = 0
  r.side_b = (r.x_lo + r.x_hi) / (2 * r.cos_theta);
  r.side_a_sq = r.side_b * r.side_b - r.x_lo * r.x_hi;
  return r;
}

SsaSpec random_two_solution_float(Rng& rng, double eps) {
  const double b = rng.uniform(0.1, 10.0);
  const double theta = rng.uniform(1.0, 89.0) * kDeg;
  const double lo = b * std::sin(theta);
  // keep clear of the tangent and isosceles limits
  const double a = lo + (b - lo) * rng.uniform(0.01, 0.99);
  return SsaSpec::from_float(a, b, theta, eps);
}

CheckResult ssa_oracle_suite(std::size_t samples, std::uint64_t seed, double angle_tol, double eps) {
  CheckResult r{"ssa-oracle"};
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const double a = rng.uniform(0.1, 10.0);
    const double b = rng.uniform(0.1, 10.0);
    const double theta = rng.uniform(1.0, 179.0) * kDeg;
    ++r.samples;
    const auto want = law_of_sines_oracle(a, b, theta);
    const SsaSolutions got = solve_ssa(SsaSpec::from_float(a, b, theta, eps));
    ++r.counts["solutions=" + std::to_string(got.triangles.size())];
    if (got.triangles.size() != want.size()) {
      r.fail(fmt({{"a", a}, {"b", b}, {"theta_deg", theta / kDeg}, {"count", double(got.triangles.size())},
                  {"oracle", double(want.size())}}));
      continue;
    }
    for (std::size_t k = 0; k < want.size(); ++k) {
      const Triangle& t = got.triangles[k];
      const double err = std::max(std::abs(t.angle(Vertex::C).radians() - want[k].apex_angle),
                                  std::abs(t.angle(Vertex::B).radians() - want[k].far_angle));
      r.worst_residual = std::max(r.worst_residual, err);
      if (!(err <= angle_tol)) {
        r.fail(fmt({{"a", a}, {"b", b}, {"theta_deg", theta / kDeg}, {"solution", double(k)}, {"error_rad", err}}));
      }
    }
  }
  return r;
}

CheckResult kernel_agreement_suite(std::size_t samples, std::uint64_t seed, kernels::Isa isa) {
  CheckResult r{"kernel-agreement"};
  const kernels::Isa used = kernels::resolve(isa);
  r.counts[std::string("isa=") + kernels::to_string(used)] = 1;
  Rng rng(seed);

  const std::size_t n = samples;
  std::vector<double> a(n), b(n), c(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = rng.uniform(0.1, 10.0);
    b[i] = rng.uniform(0.1, 10.0);
    const double theta = rng.uniform(1.0, 179.0) * kDeg;
    c[i] = std::cos(theta);
    s[i] = std::sin(theta);
  }
  const kernels::SsaBatchInput in{a, b, c, s, kDefaultEps};
  std::array<std::vector<double>, 5> ref, vec;
  for (auto* set : {&ref, &vec}) {
    for (auto& v : *set) v.assign(n, 0.0);
  }
  auto outputs = [](std::array<std::vector<double>, 5>& o) {
    return kernels::SsaBatchOutput{o[0], o[1], o[2], o[3], o[4]};
  };
  kernels::ssa_batch(in, outputs(ref), kernels::Isa::Scalar);
  kernels::ssa_batch(in, outputs(vec), used);

  for (std::size_t i = 0; i < n; ++i) {
    ++r.samples;
    for (std::size_t k = 0; k < 5; ++k) {
      if (!same_bits(ref[k][i], vec[k][i])) {
        r.fail(fmt({{"spec", double(i)}, {"field", double(k)}, {"scalar", ref[k][i]}, {"vector", vec[k][i]}}));
        break;
      }
    }
    const SsaSpec spec{Scalar::real(a[i] * a[i]), Scalar::real(b[i]), Scalar::real(c[i]), Scalar::real(s[i])};
    const int count = ssa_solution_count(spec);
    if (count != static_cast<int>(ref[0][i])) {
      r.fail(fmt({{"spec", double(i)}, {"batch_count", ref[0][i]}, {"count", double(count)}}));
    }
  }

  // residual rows: one random alpha per family against the scalar reference
  std::vector<double> cb(64), sb(64), out_ref(64), out_vec(64);
  for (int f = 0; f < 5; ++f) {
    const auto fam = static_cast<kernels::Family>(f);
    const double alpha = rng.uniform(1.0, 80.0) * kDeg;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      const double beta = (1.0 + j) * kDeg;
      cb[j] = std::cos(beta);
      sb[j] = std::sin(beta);
    }
    const kernels::RowInput row{std::cos(alpha), std::sin(alpha), cb, sb, 0.5};
    kernels::residual_row(fam, row, out_ref, kernels::Isa::Scalar);
    kernels::residual_row(fam, row, out_vec, used);
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (!same_bits(out_ref[j], out_vec[j])) {
        r.fail(fmt({{"family", double(f)}, {"column", double(j)}, {"scalar", out_ref[j]}, {"vector", out_vec[j]}}));
        break;
      }
    }
  }
  return r;
}

CheckResult dichotomy_suite(std::size_t samples, std::uint64_t seed, Backend backend, double tol) {
  CheckResult r{backend == Backend::Exact ? "dichotomy-exact" : "dichotomy"};
  Rng rng(seed);
  const Correspondence id = Correspondence::identity();
  for (std::size_t i = 0; i < samples; ++i) {
    ++r.samples;
    std::string label;
    SsaSpec spec = [&] {
      if (backend == Backend::Exact) {
        const RationalSsa q = random_two_solution_rational(rng);
        label = fmt_q(q);
        return q.exact();
      }
      SsaSpec f = random_two_solution_float(rng);
      label = "a^2=" + f.side_a_sq.to_string() + " b=" + f.side_b.to_string() + " cos=" + f.cos_theta.to_string();
      return f;
    }();
    const SsaSolutions sol = solve_ssa(spec);
    if (sol.triangles.size() != 2) {
      ++r.counts["not-two-solutions"];
      r.fail(label + " solutions=" + std::to_string(sol.triangles.size()));
      continue;
    }
    try {
      const DichotomyVerdict v = classify_pair(sol.triangles[0], sol.triangles[1], id, SsaMatch::canonical());
      ++r.counts[verdict_name(v)];
      const auto* sup = std::get_if<Supplementary>(&v);
      if (!sup) {
        r.fail(label + " verdict=" + verdict_name(v));
        continue;
      }
      const Scalar sum = sup->cos_1.key() + sup->cos_2.key();
      if (backend == Backend::Exact) {
        if (sum.raw_sign() != 0) r.fail(label + " key sum=" + sum.to_string());
      } else {
        const double d = std::abs(sum.to_double());
        r.worst_residual = std::max(r.worst_residual, d);
        if (!(d <= tol)) r.fail(label + " |cos1+cos2|=" + std::to_string(d));
      }
    } catch (const DichotomyViolation& e) {
      ++r.counts["third-outcome"];
      r.fail(label + " " + e.what());
    }
  }
  return r;
}

CheckResult lemma_suite(std::size_t samples, std::uint64_t seed, double tol) {
  CheckResult r{"lemma-common-side"};
  Rng rng(seed);
  const Correspondence id = Correspondence::identity();
  for (std::size_t i = 0; i < samples; ++i) {
    ++r.samples;
    const SsaSolutions sol = solve_ssa(random_two_solution_float(rng));
    // B at the angle vertex V, A at W, C and D the two apexes
    const Triangle& t1 = sol.triangles.at(0);
    const Triangle& t2 = sol.triangles.at(1);
    const Triangle abc(t1[Vertex::B], t1[Vertex::A], t1[Vertex::C]);
    const Triangle abd0(t2[Vertex::B], t2[Vertex::A], t2[Vertex::C]);
    const double phi = rng.uniform(0.0, 2 * kPi);
    const Isometry motion(Scalar::real(std::cos(phi)), Scalar::real(std::sin(phi)),
                          Point::real(rng.uniform(-5, 5), rng.uniform(-5, 5)), rng.uniform() < 0.5);
    const Triangle abd =
        to_common_side(abc, motion.apply(abd0), id, Vertex::A, Vertex::B, Placement::OppositeSide).second;

    const std::string label = fmt({{"sample", double(i)}, {"AB", std::sqrt(abc.side_sq(Vertex::C).to_double())},
                                   {"AC", std::sqrt(abc.side_sq(Vertex::B).to_double())}});
    try {
      const LemmaReport rep = lemma_common_side_check(abc, abd);
      const double scale = extent({&abc[0], &abc[1], &abc[2], &abd[2]});
      const double det = std::abs(rep.concyclic_det.to_double()) / std::pow(scale, 4);
      r.worst_residual = std::max(r.worst_residual, det);
      if (!rep.supplementary) r.fail(label + " angles at C and D not supplementary");
      if (!rep.opposite_sides) r.fail(label + " C and D on the same side of AB");
      if (!(det <= tol)) r.fail(label + " normalized determinant=" + std::to_string(det));
      if (!rep.side_inequality) r.fail(label + " AC >= AB");
    } catch (const LemmaPreconditionError& e) {
      ++r.counts["precondition"];
      r.fail(label + " " + e.what());
    }
  }
  return r;
}

namespace {

struct Verdicts {
  int count;
  std::string pair;
  std::string mirrored;
  CriterionCase predicted;
  bool supplementary, opposite_sides, concyclic, side_inequality;
  bool same_side_supplementary, same_side_opposite;

  bool operator==(const Verdicts&) const = default;
};

Verdicts evaluate(const SsaSpec& spec) {
  Verdicts v{};
  v.count = ssa_solution_count(spec);
  v.predicted = predict_case({spec.side_a_sq, spec.side_b * spec.side_b, AnglePlacement::OppositeFirst});
  const SsaSolutions sol = solve_ssa(spec);
  if (sol.triangles.size() != 2) return v;
  const Triangle& t1 = sol.triangles[0];
  const Triangle& t2 = sol.triangles[1];
  const Correspondence id = Correspondence::identity();
  v.pair = verdict_name(classify_pair(t1, t2, id, SsaMatch::canonical()));
  v.mirrored = verdict_name(classify_pair(t1, mirror_in_base(t1), id, SsaMatch::canonical()));

  const Triangle abc(t1[Vertex::B], t1[Vertex::A], t1[Vertex::C]);
  const Triangle abd(t2[Vertex::B], t2[Vertex::A], t2[Vertex::C]);
  const LemmaReport opp = lemma_common_side_check(abc, mirror_in_base(abd));
  v.supplementary = opp.supplementary;
  v.opposite_sides = opp.opposite_sides;
  v.concyclic = opp.concyclic.value_or(false);
  v.side_inequality = opp.side_inequality;
  const LemmaReport same = lemma_common_side_check(abc, abd);
  v.same_side_supplementary = same.supplementary;
  v.same_side_opposite = same.opposite_sides;
  return v;
}

}  // namespace

CheckResult backend_agreement_suite(std::size_t samples, std::uint64_t seed) {
  CheckResult r{"backend-agreement"};
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    ++r.samples;
    const RationalSsa q = random_two_solution_rational(rng);
    try {
      const Verdicts exact = evaluate(q.exact());
      const Verdicts real = evaluate(q.as_float());
      if (!(exact == real)) r.fail(fmt_q(q) + " exact=" + exact.pair + " float=" + real.pair);
    } catch (const GeometryError& e) {
      ++r.counts["error"];
      r.fail(fmt_q(q) + " " + e.what());
    }
  }
  return r;
}

}  // namespace planicheck
