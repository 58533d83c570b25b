#include "planicheck/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include "planicheck/random.hpp"

namespace planicheck {

namespace {

constexpr double kPi = M_PI;
constexpr double kDeg = kPi / 180.0;
constexpr double kAngleTol = 1e-9;
constexpr double kDiscontinuity = 1e-6;

double deg(double rad) { return rad / kDeg; }

Scalar real(double v) { return Scalar::real(v); }

bool near_angle(double a, double b) { return std::abs(a - b) <= kAngleTol; }

void common_flags(ScenarioTrace& tr, const ShapeParams& p) {
  tr.flags["is_isosceles"] = near_angle(p.alpha, p.beta);
  tr.angles_deg["alpha"] = deg(p.alpha);
  tr.angles_deg["beta"] = deg(p.beta);
  tr.angles_deg["gamma"] = deg(p.gamma());
}

ScenarioTrace base_trace(const ShapeParams& p, const Triangle& t) {
  ScenarioTrace tr;
  tr.points["A"] = t[Vertex::A];
  tr.points["B"] = t[Vertex::B];
  tr.points["C"] = t[Vertex::C];
  common_flags(tr, p);
  return tr;
}

}  // namespace

ShapeParams ShapeParams::from_degrees(double alpha_deg, double beta_deg) {
  return {alpha_deg * kDeg, beta_deg * kDeg};
}

double ShapeParams::gamma() const { return kPi - alpha - beta; }

void ShapeParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha > 0.0) || !(beta > 0.0) ||
      !(alpha + beta < kPi)) {
    throw GeometryError(ErrorCode::Degenerate, "shape angles must be positive with alpha + beta < pi");
  }
}

Triangle shape_triangle(const ShapeParams& p, double eps) {
  p.validate();
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  const double s = sa * cb + ca * sb;
  return Triangle(Point::real(0.0, 0.0, eps), Point::real(1.0, 0.0, eps),
                  Point::real(ca * sb / s, sa * sb / s, eps));
}

ScenarioTrace medial_circumcenter(const ShapeParams& p) {
  const Triangle t = shape_triangle(p);
  ScenarioTrace tr = base_trace(p, t);
  const Point& a = t[Vertex::A];
  const Point& b = t[Vertex::B];
  const Point& c = t[Vertex::C];

  const Point f = midpoint(b, c);
  const Point d = midpoint(c, a);
  const Point e = midpoint(a, b);
  const Circle k = circumcircle(Triangle(f, d, e));
  // k' passes through C, D, F; in the non-isosceles branch G lies on it too.
  const Circle k_prime = circumcircle(Triangle(c, d, f));
  const Circle outer = circumcircle(t);
  const Point orthocenter = a + b + c - Scalar::real(2.0) * outer.center;

  tr.points["F"] = f;
  tr.points["D"] = d;
  tr.points["E"] = e;
  tr.points["G"] = k.center;
  tr.points["G'"] = k_prime.center;
  tr.points["O"] = outer.center;
  tr.points["H"] = orthocenter;
  tr.points["N"] = midpoint(outer.center, orthocenter);
  tr.values["R_k"] = std::sqrt(k.radius_sq.to_double());
  tr.values["R_k'"] = std::sqrt(k_prime.radius_sq.to_double());
  tr.angles_deg["DGF"] = angle_cos(k.center, d, f).degrees();

  tr.residual = signed_distance(k.center, internal_bisector_line(t, Vertex::C));
  tr.flags["gamma_is_60"] = near_angle(p.gamma(), kPi / 3);
  return tr;
}

ScenarioTrace incenter_equal_segments(const ShapeParams& p) {
  const Triangle t = shape_triangle(p);
  ScenarioTrace tr = base_trace(p, t);
  const BisectorFeet feet = incenter_and_bisector_feet(t);
  const Point& c = t[Vertex::C];

  tr.points["J"] = feet.incenter;
  tr.points["A1"] = feet.foot_a;
  tr.points["B1"] = feet.foot_b;
  tr.points["C1"] = feet.foot_c;
  tr.residual = squared_distance(feet.incenter, feet.foot_a) - squared_distance(feet.incenter, feet.foot_b);

  // exterior angles of ABB1 and ABA1, with the half angles alpha/2, beta/2
  tr.angles_deg["CB1J"] = angle_cos(feet.foot_b, c, feet.incenter).degrees();
  tr.angles_deg["CA1J"] = angle_cos(feet.foot_a, c, feet.incenter).degrees();
  tr.angles_deg["CB1J_expected"] = deg(p.alpha + p.beta / 2);
  tr.angles_deg["CA1J_expected"] = deg(p.beta + p.alpha / 2);
  tr.flags["gamma_is_60"] = near_angle(p.gamma(), kPi / 3);
  return tr;
}

namespace {

// Rectangle with Q on AC and P on BC at height frac*h, M and N their feet on AB.
ScenarioTrace rectangle_trace(const ShapeParams& p, double frac) {
  const Triangle t = shape_triangle(p);
  ScenarioTrace tr = base_trace(p, t);
  const Point& a = t[Vertex::A];
  const Point& b = t[Vertex::B];
  const Point& c = t[Vertex::C];
  const Scalar k = real(frac);

  const Point q = a + k * (c - a);
  const Point pp = b + k * (c - b);
  const Line ab = line_through(a, b);
  const Point m = foot_of_perpendicular(q, ab);
  const Point n = foot_of_perpendicular(pp, ab);
  const auto center = line_intersection(line_through(m, pp), line_through(n, q));
  if (!center) throw GeometryError(ErrorCode::Degenerate, "rectangle diagonals are parallel");

  tr.points["M"] = m;
  tr.points["N"] = n;
  tr.points["P"] = pp;
  tr.points["Q"] = q;
  tr.points["O"] = *center;
  tr.points["H"] = foot_of_perpendicular(c, ab);
  tr.values["height"] = (q.y).to_double();
  tr.values["width"] = (pp.x - q.x).to_double();
  tr.values["altitude"] = c.y.to_double();

  const AngleCos aco = angle_cos(c, a, *center);
  const AngleCos bco = angle_cos(c, b, *center);
  tr.angles_deg["ACO"] = aco.degrees();
  tr.angles_deg["BCO"] = bco.degrees();
  tr.residual = aco.key() - bco.key();
  tr.flags["gamma_is_90"] = near_angle(p.gamma(), kPi / 2);
  return tr;
}

void require_feet_on_base(const ShapeParams& p) {
  p.validate();
  if (p.alpha > kPi / 2 + kAngleTol || p.beta > kPi / 2 + kAngleTol) {
    throw GeometryError(ErrorCode::Precondition, "inscribed rectangle feet fall off segment AB");
  }
}

}  // namespace

ScenarioTrace inscribed_square(const ShapeParams& p) {
  require_feet_on_base(p);
  const Triangle t = shape_triangle(p);
  const double h = t[Vertex::C].y.to_double();
  // side s = c h / (c + h) with c = 1
  ScenarioTrace tr = rectangle_trace(p, 1.0 / (1.0 + h));
  tr.values["side"] = h / (1.0 + h);
  return tr;
}

ScenarioTrace inscribed_rectangle(const ShapeParams& p, double frac) {
  require_feet_on_base(p);
  if (!(frac > 0.0 && frac < 1.0)) {
    throw GeometryError(ErrorCode::InvalidArgument, "rectangle height fraction must lie in (0, 1)");
  }
  return rectangle_trace(p, frac);
}

ScenarioTrace bisector_30(const ShapeParams& p) {
  const Triangle t = shape_triangle(p);
  ScenarioTrace tr = base_trace(p, t);
  const Point& a = t[Vertex::A];
  const Point& b = t[Vertex::B];
  const Point& c = t[Vertex::C];
  const BisectorFeet feet = incenter_and_bisector_feet(t);
  const Point& a1 = feet.foot_a;
  const Point& b1 = feet.foot_b;
  const Point& j = feet.incenter;

  const Line bb1 = line_through(b, b1);
  const Point a_prime = reflect(a1, bb1);
  const Line cj = line_through(c, j);
  const auto e = line_intersection(line_through(a1, b1), cj);
  const auto c1 = line_intersection(cj, line_through(a, b));

  tr.points["A1"] = a1;
  tr.points["B1"] = b1;
  tr.points["J"] = j;
  tr.points["A'"] = a_prime;
  if (e) tr.points["E"] = *e;
  if (c1) tr.points["C1"] = *c1;

  const AngleCos target = angle_cos(b1, b, a1);
  tr.angles_deg["BB1A1"] = target.degrees();
  tr.angles_deg["AB1A1"] = angle_cos(b1, a, a1).degrees();
  tr.angles_deg["AA'A1"] = angle_cos(a_prime, a, a1).degrees();
  // valid under the hypothesis BB1A1 = 30 deg (half angles alpha/2 etc.)
  tr.angles_deg["AB1A1_expected"] = 120.0 + deg(p.gamma() / 2 - p.alpha / 2);
  tr.angles_deg["AA'A1_expected"] = 90.0 + deg(p.beta / 2);

  tr.values["B1A1"] = std::sqrt(squared_distance(b1, a1).to_double());
  tr.values["B1A'"] = std::sqrt(squared_distance(b1, a_prime).to_double());
  tr.values["dist_B1_BA"] = std::abs(signed_distance(b1, line_through(b, a)).to_double());
  tr.values["dist_B1_BC"] = std::abs(signed_distance(b1, line_through(b, c)).to_double());
  tr.values["dist_B1_AA1"] = std::abs(signed_distance(b1, line_through(a, a1)).to_double());

  tr.residual = target.key() - real(std::sqrt(3.0) / 2);
  tr.flags["gamma_is_60"] = near_angle(p.gamma(), kPi / 3);
  tr.flags["A_is_120"] = near_angle(p.alpha, 2 * kPi / 3);
  return tr;
}

const char* to_string(Branch b) {
  switch (b) {
    case Branch::Isosceles: return "isosceles";
    case Branch::Gamma60: return "gamma=60";
    case Branch::Gamma90: return "gamma=90";
    case Branch::Alpha120: return "alpha=120";
  }
  return "?";
}

double branch_distance(Branch b, const ShapeParams& p) {
  switch (b) {
    case Branch::Isosceles: return std::abs(p.alpha - p.beta) / std::sqrt(2.0);
    case Branch::Gamma60: return std::abs(p.alpha + p.beta - 2 * kPi / 3) / std::sqrt(2.0);
    case Branch::Gamma90: return std::abs(p.alpha + p.beta - kPi / 2) / std::sqrt(2.0);
    case Branch::Alpha120: return std::abs(p.alpha - 2 * kPi / 3);
  }
  return HUGE_VAL;
}

const std::vector<ScenarioInfo>& scenario_registry() {
  using kernels::Family;
  static const std::vector<ScenarioInfo> registry{
      {"medial-circumcenter", Family::MedialCircumcenter, {Branch::Isosceles, Branch::Gamma60}, true, kPi},
      {"incenter-segments", Family::IncenterSegments, {Branch::Isosceles, Branch::Gamma60}, true, kPi},
      {"square-center", Family::SquareCenter, {Branch::Isosceles, Branch::Gamma90}, true, kPi / 2},
      {"rectangle-center", Family::RectangleCenter, {Branch::Isosceles}, false, kPi / 2},
      {"bisector-30", Family::Bisector30, {Branch::Gamma60, Branch::Alpha120}, true, kPi},
  };
  return registry;
}

namespace {

std::string available_names() {
  std::string out;
  for (const auto& s : scenario_registry()) {
    if (!out.empty()) out += ", ";
    out += s.name;
  }
  return out;
}

}  // namespace

UnknownScenario::UnknownScenario(std::string_view name)
    : std::invalid_argument("unknown scenario '" + std::string(name) + "' (available: " + available_names() + ")") {}

const ScenarioInfo& find_scenario(std::string_view name) {
  for (const auto& s : scenario_registry()) {
    if (s.name == name) return s;
  }
  throw UnknownScenario(name);
}

ScanReport level_set_scan(std::string_view scenario, const ScanOptions& opt) {
  const ScenarioInfo& info = find_scenario(scenario);
  if (!(opt.grid_step > 0.0) || !(opt.refine_tol > 0.0) || !(opt.delta > 0.0)) {
    throw GeometryError(ErrorCode::InvalidArgument, "grid step and tolerances must be positive");
  }
  const double h = opt.grid_step;
  const double cap = std::min(info.max_base_angle, kPi);

  // Offsets keep nodes off the lines alpha = beta, alpha + beta = const and
  // alpha = const for the usual degree steps.
  std::vector<double> alphas, betas;
  for (std::size_t i = 0; (i + 0.5) * h < cap; ++i) alphas.push_back((i + 0.5) * h);
  for (std::size_t j = 0; (j + 0.25) * h < cap; ++j) betas.push_back((j + 0.25) * h);
  const std::size_t na = alphas.size(), nb = betas.size();

  auto inside = [&](double a, double b) {
    if (!(a + b < kPi) || a > cap || b > cap) return false;
    const double g = kPi - a - b;
    if (opt.gamma_min && !(g > *opt.gamma_min)) return false;
    if (opt.gamma_max && !(g < *opt.gamma_max)) return false;
    if (std::abs(a - b) < opt.exclude_isosceles_band) return false;
    return true;
  };

  std::vector<double> cos_b(nb), sin_b(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    cos_b[j] = std::cos(betas[j]);
    sin_b[j] = std::sin(betas[j]);
  }
  std::vector<double> grid(na * nb, std::nan(""));
  std::vector<double> row(nb);
  ScanReport rep;
  rep.scenario = info.name;
  rep.grid_step = h;
  for (std::size_t i = 0; i < na; ++i) {
    const kernels::RowInput in{std::cos(alphas[i]), std::sin(alphas[i]), cos_b, sin_b, opt.param};
    kernels::residual_row(info.family, in, row, opt.isa);
    for (std::size_t j = 0; j < nb; ++j) {
      if (inside(alphas[i], betas[j])) {
        grid[i * nb + j] = row[j];
        ++rep.nodes;
      }
    }
  }
  if (rep.nodes == 0) throw GeometryError(ErrorCode::Precondition, "scan region is empty");

  auto eval = [&](double a, double b) { return kernels::residual_at(info.family, a, b, opt.param); };

  std::vector<ScanRoot> found;
  auto refine = [&](double a0, double b0, double a1, double b1, double f0) {
    double lo = 0.0, hi = 1.0, s = 0.5, fs = f0;
    const double span = std::hypot(a1 - a0, b1 - b0);
    for (int it = 0; it < 200; ++it) {
      s = 0.5 * (lo + hi);
      if (s <= lo || s >= hi) break;
      fs = eval(a0 + (a1 - a0) * s, b0 + (b1 - b0) * s);
      if (fs == 0.0) break;
      if ((hi - lo) * span <= opt.refine_tol && std::abs(fs) <= opt.refine_tol) break;
      if ((fs < 0) == (f0 < 0)) {
        lo = s;
      } else {
        hi = s;
      }
    }
    found.push_back({{a0 + (a1 - a0) * s, b0 + (b1 - b0) * s}, fs, std::nullopt, 0.0});
  };

  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const double r0 = grid[i * nb + j];
      if (std::isnan(r0)) continue;
      if (r0 == 0.0) found.push_back({{alphas[i], betas[j]}, 0.0, std::nullopt, 0.0});
      const std::array<std::pair<std::size_t, std::size_t>, 2> nbrs{{{i, j + 1}, {i + 1, j}}};
      for (const auto& [ni, nj] : nbrs) {
        if (ni >= na || nj >= nb) continue;
        const double r1 = grid[ni * nb + nj];
        if (std::isnan(r1) || !(r0 * r1 < 0.0)) continue;
        ++rep.sign_changes;
        refine(alphas[i], betas[j], alphas[ni], betas[nj], r0);
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const ScanRoot& x, const ScanRoot& y) {
    return std::tie(x.at.alpha, x.at.beta) < std::tie(y.at.alpha, y.at.beta);
  });

  for (ScanRoot& r : found) {
    if (std::abs(r.residual) > kDiscontinuity) {
      rep.discontinuities.push_back(r);
      continue;
    }
    r.distance = HUGE_VAL;
    for (Branch b : info.conclusion) {
      const double d = branch_distance(b, r.at);
      r.distance = std::min(r.distance, d);
      if (!r.branch && d <= opt.delta) r.branch = b;
    }
    ++rep.branch_counts[r.branch ? to_string(*r.branch) : "unattributed"];
    rep.worst_residual = std::max(rep.worst_residual, std::abs(r.residual));
    if (!r.branch && info.containment_asserted) rep.violations.push_back(r);
    rep.roots.push_back(r);
  }
  if (info.containment_asserted) rep.containment = rep.violations.empty();
  return rep;
}

namespace {

std::string describe(const ShapeParams& p, double value) {
  std::ostringstream os;
  os.precision(12);
  os << "alpha=" << deg(p.alpha) << "deg beta=" << deg(p.beta) << "deg value=" << value;
  return os.str();
}

constexpr std::size_t kMaxWitnesses = 5;

// Samples a hypothesis set and requires |residual| <= tol everywhere.
ImplicationCheck sample_check(std::string name, bool gating, std::size_t n, Rng& rng, double tol,
                              const std::function<ShapeParams(Rng&)>& draw,
                              const std::function<double(const ShapeParams&)>& residual) {
  ImplicationCheck c;
  c.name = std::move(name);
  c.gating = gating;
  for (std::size_t k = 0; k < n; ++k) {
    const ShapeParams p = draw(rng);
    const double r = std::abs(residual(p));
    ++c.samples;
    c.worst_residual = std::max(c.worst_residual, r);
    if (!(r <= tol)) {
      c.pass = false;
      if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(describe(p, r));
    }
  }
  return c;
}

ShapeParams isosceles(Rng& rng, double max_deg) {
  const double a = rng.uniform(1.0, max_deg) * kDeg;
  return {a, a};
}

ShapeParams with_gamma(Rng& rng, double gamma_deg) {
  const double rest = 180.0 - gamma_deg;
  const double a = rng.uniform(1.0, rest - 1.0);
  return ShapeParams::from_degrees(a, rest - a);
}

double res(const ScenarioTrace& t) { return t.residual.to_double(); }

}  // namespace

std::vector<ImplicationCheck> forward_implications(std::string_view scenario, std::size_t samples,
                                                   std::uint64_t seed, double tol) {
  const ScenarioInfo& info = find_scenario(scenario);
  Rng rng(seed);
  std::vector<ImplicationCheck> out;
  using kernels::Family;
  switch (info.family) {
    case Family::MedialCircumcenter:
      out.push_back(sample_check("isosceles-center-on-bisector", true, samples, rng, tol,
                                 [](Rng& r) { return isosceles(r, 89.0); },
                                 [](const ShapeParams& p) { return res(medial_circumcenter(p)); }));
      out.push_back(sample_check("gamma60-center-on-bisector", false, samples, rng, tol,
                                 [](Rng& r) { return with_gamma(r, 60.0); },
                                 [](const ShapeParams& p) { return res(medial_circumcenter(p)); }));
      break;
    case Family::IncenterSegments:
      out.push_back(sample_check("isosceles-equal-segments", true, samples, rng, tol,
                                 [](Rng& r) { return isosceles(r, 89.0); },
                                 [](const ShapeParams& p) { return res(incenter_equal_segments(p)); }));
      out.push_back(sample_check("gamma60-equal-segments", false, samples, rng, tol,
                                 [](Rng& r) { return with_gamma(r, 60.0); },
                                 [](const ShapeParams& p) { return res(incenter_equal_segments(p)); }));
      break;
    case Family::SquareCenter:
      out.push_back(sample_check("right-angle-square-center-on-bisector", true, samples, rng, tol,
                                 [](Rng& r) { return with_gamma(r, 90.0); },
                                 [](const ShapeParams& p) { return res(inscribed_square(p)); }));
      out.push_back(sample_check("isosceles-square-center-on-bisector", true, samples, rng, tol,
                                 [](Rng& r) { return isosceles(r, 89.0); },
                                 [](const ShapeParams& p) { return res(inscribed_square(p)); }));
      break;
    case Family::RectangleCenter: {
      ImplicationCheck all{"isosceles-rectangle-center-on-bisector"};
      for (int k = 0; k < 10; ++k) {
        const double frac = (k + 0.5) / 10.0;
        ImplicationCheck c = sample_check(
            all.name, true, samples, rng, tol, [](Rng& r) { return isosceles(r, 89.0); },
            [frac](const ShapeParams& p) { return res(inscribed_rectangle(p, frac)); });
        all.samples += c.samples;
        all.worst_residual = std::max(all.worst_residual, c.worst_residual);
        all.pass = all.pass && c.pass;
        for (auto& w : c.witnesses) {
          if (all.witnesses.size() < kMaxWitnesses) all.witnesses.push_back("t=" + std::to_string(frac) + " " + w);
        }
      }
      out.push_back(std::move(all));
      break;
    }
    case Family::Bisector30: {
      out.push_back(sample_check("gamma60-gives-30", true, samples, rng, tol,
                                 [](Rng& r) { return with_gamma(r, 60.0); },
                                 [](const ShapeParams& p) { return res(bisector_30(p)); }));
      out.push_back(sample_check(
          "alpha120-gives-30", true, samples, rng, tol,
          [](Rng& r) { return ShapeParams::from_degrees(120.0, r.uniform(1.0, 59.0)); },
          [](const ShapeParams& p) { return res(bisector_30(p)); }));
      // Shapes with gamma != 60 and alpha != 120 must miss 30 deg by a margin.
      static const std::array<std::pair<double, double>, 6> kOffSet{
          {{45, 45}, {50, 50}, {40, 70}, {30, 30}, {100, 40}, {20, 110}}};
      ImplicationCheck miss{"off-set-shapes-miss-30"};
      miss.worst_residual = HUGE_VAL;
      for (const auto& [a, b] : kOffSet) {
        const ShapeParams p = ShapeParams::from_degrees(a, b);
        const double gap = std::abs(bisector_30(p).angles_deg.at("BB1A1") - 30.0) * kDeg;
        ++miss.samples;
        miss.worst_residual = std::min(miss.worst_residual, gap);
        if (!(gap > 1e-3)) {
          miss.pass = false;
          miss.witnesses.push_back(describe(p, gap));
        }
      }
      out.push_back(std::move(miss));
      break;
    }
  }
  return out;
}

}  // namespace planicheck
