#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "planicheck/kernels.hpp"
#include "planicheck/scalar.hpp"
#include "planicheck/suites.hpp"

namespace planicheck::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { Json, Markdown };

/// Where the given angle sits relative to the sides a and b.
enum class AngleAt { OppositeA, OppositeB, Included };

/// Bad flags or values; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string scenario;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  Backend backend = Backend::Float;
  double eps = kDefaultEps;
  bool eps_given = false;
  double grid_step_deg = 0.25;
  double refine_tol = 1e-12;
  double delta = 1e-6;
  std::optional<std::string> report_path;
  Format format = Format::Json;
  kernels::Isa isa = kernels::Isa::Auto;

  // ssa
  double a = 0.0;
  double b = 0.0;
  double angle_deg = 0.0;
  AngleAt angle_at = AngleAt::OppositeA;

  // logic
  std::optional<std::string> formula;
  std::optional<std::string> equiv;
  std::optional<std::string> constraint;

  /// Throws UsageError.
  void validate() const;
  nlohmann::json echo() const;
};

struct Report {
  std::string command;
  nlohmann::json config;
  std::vector<CheckResult> checks;
  std::optional<bool> containment;
  /// Command specific sections (solutions, roots, scan statistics).
  nlohmann::json extra = nlohmann::json::object();
  std::vector<std::string> warnings;
  double wall_time_s = 0.0;

  bool pass() const;
};

/// Rounds to 12 significant digits; non-finite values become null.
nlohmann::json number(double x);

/// Everything except the wall time; identical configs give identical bodies.
nlohmann::json report_body(const Report& r);
std::string render_json(const Report& r);
std::string render_markdown(const Report& r);
std::string render(const Report& r, Format f);

Report cmd_ssa(const RunConfig& c);
Report cmd_verify(const RunConfig& c);
Report cmd_scenario(const RunConfig& c);
Report cmd_logic(const RunConfig& c);

/// Dispatches on c.command, times the run and fills in the config echo.
Report run(const RunConfig& c);

/// 0 when every gating check passes, 1 otherwise.
int exit_code(const Report& r);

}  // namespace planicheck::cli
