#include <chrono>
#include <cmath>

#include "planicheck/cli.hpp"
#include "planicheck/logic.hpp"
#include "planicheck/scenarios.hpp"
#include "planicheck/ssa.hpp"

namespace planicheck::cli {

using nlohmann::json;

namespace {

constexpr double kDeg = M_PI / 180.0;

const char* to_string(AngleAt a) {
  switch (a) {
    case AngleAt::OppositeA: return "opposite-a";
    case AngleAt::OppositeB: return "opposite-b";
    case AngleAt::Included: return "included";
  }
  return "?";
}

json point_json(const Point& p) { return json::array({number(p.x.to_double()), number(p.y.to_double())}); }

json triangle_json(const Triangle& t) {
  return {{"A", point_json(t[Vertex::A])},
          {"B", point_json(t[Vertex::B])},
          {"C", point_json(t[Vertex::C])},
          {"angles_deg",
           {{"A", number(t.angle(Vertex::A).degrees())},
            {"B", number(t.angle(Vertex::B).degrees())},
            {"C", number(t.angle(Vertex::C).degrees())}}}};
}

}  // namespace

void RunConfig::validate() const {
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string(what) + " must be a positive number");
  };
  if (command == "verify") {
    if (samples < 1) throw UsageError("--samples must be at least 1");
    positive(eps, "--eps");
  } else if (command == "scenario") {
    if (samples < 1) throw UsageError("--samples must be at least 1");
    positive(grid_step_deg, "--grid-step-deg");
    positive(refine_tol, "--refine-tol");
    positive(delta, "--delta");
    find_scenario(scenario);
  } else if (command == "ssa") {
    positive(a, "--a");
    positive(b, "--b");
    positive(eps, "--eps");
    if (!(angle_deg > 0.0 && angle_deg < 180.0)) throw UsageError("--angle-deg must lie in (0, 180)");
  } else if (command == "logic") {
    if (formula.has_value() != equiv.has_value()) throw UsageError("--formula and --equiv go together");
    if (constraint && !formula) throw UsageError("--constraint needs --formula and --equiv");
  } else {
    throw UsageError("unknown command '" + command + "'");
  }
}

json RunConfig::echo() const {
  json j = {{"command", command}, {"format", format == Format::Json ? "json" : "markdown"}};
  if (command == "verify" || command == "scenario") {
    j["samples"] = samples;
    j["seed"] = seed;
    j["rng"] = Rng::kAlgorithm;
    j["isa"] = kernels::to_string(isa);
  }
  if (command == "verify") {
    j["backend"] = backend == Backend::Exact ? "exact" : "float";
    if (backend == Backend::Float) j["eps"] = number(eps);
  }
  if (command == "scenario") {
    j["scenario"] = scenario;
    j["grid_step_deg"] = number(grid_step_deg);
    j["refine_tol"] = number(refine_tol);
    j["delta"] = number(delta);
  }
  if (command == "ssa") {
    j["a"] = number(a);
    j["b"] = number(b);
    j["angle_deg"] = number(angle_deg);
    j["angle_at"] = to_string(angle_at);
    j["eps"] = number(eps);
  }
  if (command == "logic") {
    if (formula) j["formula"] = *formula;
    if (equiv) j["equiv"] = *equiv;
    if (constraint) j["constraint"] = *constraint;
  }
  return j;
}

Report cmd_ssa(const RunConfig& c) {
  Report r;
  const double theta = c.angle_deg * kDeg;
  json solutions = json::array();
  CheckResult count_check{"solution-count"};
  count_check.samples = 1;

  if (c.angle_at == AngleAt::Included) {
    // two sides and the included angle fix the triangle
    const Scalar cos_t = Scalar::real(std::cos(theta), c.eps);
    const Scalar sin_t = Scalar::real(std::sin(theta), c.eps);
    const Scalar a = Scalar::real(c.a, c.eps);
    const Triangle t(Point::real(0, 0, c.eps), Point::real(c.b, 0, c.eps), Point(a * cos_t, a * sin_t));
    solutions.push_back(triangle_json(t));
    r.extra["case"] = to_string(predict_case(
        {Scalar::real(c.a * c.a, c.eps), Scalar::real(c.b * c.b, c.eps), AnglePlacement::Included}));
  } else {
    const bool opp_a = c.angle_at == AngleAt::OppositeA;
    const double opposite = opp_a ? c.a : c.b;
    const double adjacent = opp_a ? c.b : c.a;
    const SsaSpec spec = SsaSpec::from_float(opposite, adjacent, theta, c.eps);
    const SsaSolutions sol = solve_ssa(spec);
    for (const auto& t : sol.triangles) solutions.push_back(triangle_json(t));
    r.extra["case"] = to_string(predict_case({Scalar::real(c.a * c.a, c.eps), Scalar::real(c.b * c.b, c.eps),
                                              opp_a ? AnglePlacement::OppositeFirst : AnglePlacement::OppositeSecond}));
    const int count = ssa_solution_count(spec);
    if (count != static_cast<int>(sol.triangles.size())) {
      count_check.fail("predicted " + std::to_string(count) + " solutions, built " +
                       std::to_string(sol.triangles.size()));
    }
    if (sol.triangles.size() == 2) {
      const DichotomyVerdict v = classify_pair(sol.triangles[0], sol.triangles[1], Correspondence::identity(),
                                               SsaMatch::canonical());
      json verdict = {{"name", verdict_name(v)}};
      if (const auto* s = std::get_if<Supplementary>(&v)) {
        verdict["angles_deg"] = json::array({number(s->cos_1.degrees()), number(s->cos_2.degrees())});
      }
      r.extra["verdict"] = verdict;
    }
  }
  r.extra["solution_count"] = solutions.size();
  r.extra["solutions"] = solutions;
  r.checks.push_back(count_check);
  return r;
}

Report cmd_verify(const RunConfig& c) {
  Report r;
  if (c.backend == Backend::Exact && c.eps_given) r.warnings.push_back("--eps is ignored by the exact backend");
  const double eps = c.backend == Backend::Exact ? kDefaultEps : c.eps;
  r.checks.push_back(ssa_oracle_suite(c.samples, c.seed, 1e-9, eps));
  r.checks.push_back(kernel_agreement_suite(c.samples, c.seed + 1, c.isa));
  r.checks.push_back(dichotomy_suite(c.samples, c.seed + 2, c.backend));
  r.checks.push_back(lemma_suite(c.samples, c.seed + 3));
  r.checks.push_back(backend_agreement_suite(c.samples, c.seed + 4));
  return r;
}

Report cmd_scenario(const RunConfig& c) {
  Report r;
  const ScenarioInfo& info = find_scenario(c.scenario);
  ScanOptions opt;
  opt.grid_step = c.grid_step_deg * kDeg;
  opt.refine_tol = c.refine_tol;
  opt.delta = c.delta;
  opt.isa = c.isa;
  const ScanReport scan = level_set_scan(info.name, opt);

  CheckResult contain{"containment"};
  contain.gating = info.containment_asserted;
  contain.samples = scan.roots.size();
  contain.counts = scan.branch_counts;
  contain.counts["discontinuities"] = scan.discontinuities.size();
  contain.counts["sign_changes"] = scan.sign_changes;
  contain.counts["nodes"] = scan.nodes;
  contain.worst_residual = scan.worst_residual;
  for (const auto& v : scan.violations) {
    contain.fail("alpha=" + number(v.at.alpha / kDeg).dump() + "deg beta=" + number(v.at.beta / kDeg).dump() +
                 "deg distance=" + number(v.distance).dump());
  }
  if (!info.containment_asserted) contain.pass = true;
  r.checks.push_back(contain);
  r.containment = scan.containment;

  for (const auto& f : forward_implications(info.name, c.samples, c.seed)) {
    CheckResult cr{f.name, f.pass, f.gating, f.samples, f.worst_residual, {}, f.witnesses};
    r.checks.push_back(cr);
  }

  auto root_json = [](const ScanRoot& x) {
    return json{{"alpha_deg", number(x.at.alpha / kDeg)},
                {"beta_deg", number(x.at.beta / kDeg)},
                {"gamma_deg", number(x.at.gamma() / kDeg)},
                {"residual", number(x.residual)},
                {"branch", x.branch ? json(to_string(*x.branch)) : json(nullptr)}};
  };
  json roots = json::array();
  for (const auto& x : scan.roots) roots.push_back(root_json(x));
  json disc = json::array();
  for (const auto& x : scan.discontinuities) disc.push_back(root_json(x));
  json conclusion = json::array();
  for (Branch b : info.conclusion) conclusion.push_back(to_string(b));
  r.extra["conclusion"] = conclusion;
  r.extra["containment_asserted"] = info.containment_asserted;
  r.extra["roots"] = roots;
  r.extra["discontinuities"] = disc;
  return r;
}

namespace {

json assignment_json(const logic::Assignment& a) {
  json j = json::object();
  for (const auto& [k, v] : a) j[k] = v;
  return j;
}

std::string assignment_text(const logic::Assignment& a) {
  std::string s;
  for (const auto& [k, v] : a) s += (s.empty() ? "" : " ") + k + "=" + (v ? "true" : "false");
  return s;
}

CheckResult as_check(const logic::EquivalenceCheck& e) {
  CheckResult c{e.name};
  c.pass = e.result.equivalent;
  c.samples = e.result.rows;
  c.counts["rows"] = e.result.rows;
  c.counts["satisfying"] = e.result.satisfying;
  if (e.result.witness) c.fail(assignment_text(*e.result.witness));
  return c;
}

json scheme_json(const logic::ProblemScheme& s) {
  return {{"kind", to_string(s.kind)},
          {"generating_1", logic::print(*s.generating_1)},
          {"generating_2", logic::print(*s.generating_2)},
          {"combined", logic::print(*s.combined)},
          {"inverse", logic::print(*s.inverse)}};
}

}  // namespace

Report cmd_logic(const RunConfig& c) {
  Report r;
  try {
    if (c.formula) {
      const logic::EquivalenceCheck e = [&] {
        const auto f1 = logic::parse_formula(*c.formula);
        const auto f2 = logic::parse_formula(*c.equiv);
        logic::FormulaPtr k;
        if (c.constraint) k = logic::parse_formula(*c.constraint);
        logic::EquivalenceCheck out{"equivalence", logic::print(*f1), logic::print(*f2)};
        if (k) out.constraint = logic::print(*k);
        out.result = logic::equivalent(*f1, *f2, k.get());
        return out;
      }();
      r.checks.push_back(as_check(e));
      r.extra["equivalent"] = e.result.equivalent;
      r.extra["parsed"] = {{"formula", e.lhs}, {"equiv", e.rhs}};
      if (e.constraint) r.extra["parsed"]["constraint"] = *e.constraint;
      if (e.result.witness) r.extra["witness"] = assignment_json(*e.result.witness);
      return r;
    }
  } catch (const logic::ParseError& e) {
    throw UsageError(e.what());
  } catch (const logic::AtomBudgetExceeded& e) {
    throw UsageError(e.what());
  }

  json identities = json::array();
  for (const auto& e : logic::composition_identities()) {
    r.checks.push_back(as_check(e));
    json j = {{"name", e.name}, {"lhs", e.lhs}, {"rhs", e.rhs}};
    if (e.constraint) j["constraint"] = *e.constraint;
    identities.push_back(j);
  }
  r.extra["identities"] = identities;
  r.extra["schemes"] = json::array({scheme_json(logic::compose_scheme("t", "p", "q", "r", logic::Disjunction::Inclusive)),
                                    scheme_json(logic::compose_scheme("t", "p", "q", "r", logic::Disjunction::Exclusive))});
  return r;
}

Report run(const RunConfig& c) {
  c.validate();
  const auto start = std::chrono::steady_clock::now();
  Report r;
  if (c.command == "ssa") {
    r = cmd_ssa(c);
  } else if (c.command == "verify") {
    r = cmd_verify(c);
  } else if (c.command == "scenario") {
    r = cmd_scenario(c);
  } else {
    r = cmd_logic(c);
  }
  r.command = c.command;
  r.config = c.echo();
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace planicheck::cli
