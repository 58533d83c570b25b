// planicheck: SSA queries, randomized property suites, shape-space scans and
// propositional equivalence checks.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "planicheck/cli.hpp"
#include "planicheck/scenarios.hpp"

using planicheck::cli::RunConfig;

namespace {

void add_output_flags(CLI::App* cmd, RunConfig& c, std::string& format) {
  cmd->add_option("--report", c.report_path, "Write the report to this path");
  cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "markdown"}));
}

void add_isa_flag(CLI::App* cmd, std::string& isa) {
  cmd->add_option("--isa", isa, "Kernel variant")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
}

void print_summary(const planicheck::cli::Report& r) {
  for (const auto& c : r.checks) {
    std::cout << (c.pass ? "pass " : "FAIL ") << c.name << (c.gating ? "" : " (info)") << "  samples=" << c.samples
              << "\n";
  }
  if (r.containment) std::cout << "containment " << (*r.containment ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planimetry verification toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", planicheck::cli::kVersion);

  RunConfig c;
  std::string format = "json";
  std::string isa = "auto";
  std::string backend = "float";
  std::string opposite;
  bool included = false;

  auto* ssa = app.add_subcommand("ssa", "Solve two sides and an angle, classify the solution pair");
  ssa->add_option("--a", c.a, "Length of side a")->required();
  ssa->add_option("--b", c.b, "Length of side b")->required();
  ssa->add_option("--angle-deg", c.angle_deg, "The given angle in degrees")->required();
  auto* opp = ssa->add_option("--opposite", opposite, "Side opposite the angle")->check(CLI::IsMember({"a", "b"}));
  ssa->add_flag("--included", included, "The angle lies between a and b")->excludes(opp);
  ssa->add_option("--eps", c.eps, "Float tolerance");
  add_output_flags(ssa, c, format);

  auto* verify = app.add_subcommand("verify", "Run the seeded SSA, dichotomy and backend suites");
  verify->add_option("--samples", c.samples, "Samples per suite");
  verify->add_option("--seed", c.seed, "RNG seed");
  verify->add_option("--backend", backend, "Backend of the dichotomy suite")
      ->check(CLI::IsMember({"exact", "float"}));
  auto* eps = verify->add_option("--eps", c.eps, "Float tolerance");
  add_isa_flag(verify, isa);
  add_output_flags(verify, c, format);

  auto* scenario = app.add_subcommand("scenario", "Scan a shape-space level set and check its implications");
  scenario->add_option("name", c.scenario, "Scenario name")->required();
  scenario->add_option("--grid-step-deg", c.grid_step_deg, "Grid step in degrees");
  scenario->add_option("--refine-tol", c.refine_tol, "Bisection tolerance");
  scenario->add_option("--delta", c.delta, "Containment distance in radians");
  scenario->add_option("--samples", c.samples, "Samples per forward implication");
  scenario->add_option("--seed", c.seed, "RNG seed");
  add_isa_flag(scenario, isa);
  add_output_flags(scenario, c, format);

  auto* logic = app.add_subcommand("logic", "Check the composition identities or one equivalence");
  logic->add_option("--formula", c.formula, "Left formula");
  logic->add_option("--equiv", c.equiv, "Right formula");
  logic->add_option("--constraint", c.constraint, "Only compare rows where this holds");
  add_output_flags(logic, c, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    c.format = format == "markdown" ? planicheck::cli::Format::Markdown : planicheck::cli::Format::Json;
    c.isa = planicheck::kernels::parse_isa(isa.c_str());
    c.backend = backend == "exact" ? planicheck::Backend::Exact : planicheck::Backend::Float;
    c.eps_given = eps->count() > 0;
    if (included) {
      c.angle_at = planicheck::cli::AngleAt::Included;
    } else if (opposite == "b") {
      c.angle_at = planicheck::cli::AngleAt::OppositeB;
    }

    const planicheck::cli::Report r = planicheck::cli::run(c);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    const std::string text = planicheck::cli::render(r, c.format);
    if (c.report_path) {
      std::ofstream out(*c.report_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << *c.report_path << "\n";
        return 2;
      }
      out << text;
      print_summary(r);
    } else {
      std::cout << text;
    }
    return planicheck::cli::exit_code(r);
  } catch (const planicheck::UnknownScenario& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const planicheck::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const planicheck::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
