#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "planicheck/geometry.hpp"
#include "planicheck/kernels.hpp"

namespace planicheck {

/// A triangle up to similarity: base angles at A and B (radians), AB = 1.
struct ShapeParams {
  double alpha;
  double beta;

  static ShapeParams from_degrees(double alpha_deg, double beta_deg);
  double gamma() const;
  void validate() const;
};

/// A = (0,0), B = (1,0), C above AB.
Triangle shape_triangle(const ShapeParams& p, double eps = kDefaultEps);

/// One problem configuration with its auxiliary points and measured angles.
struct ScenarioTrace {
  std::map<std::string, Point> points;
  std::map<std::string, double> angles_deg;
  std::map<std::string, double> values;
  std::map<std::string, bool> flags;
  Scalar residual;

  const Point& at(const std::string& label) const { return points.at(label); }
};

/// Midpoints F, D, E of BC, CA, AB; G the circumcenter of FDE. Residual: signed
/// distance from G to the internal bisector of the angle at C.
ScenarioTrace medial_circumcenter(const ShapeParams& p);
/// J the incenter, A1, B1 bisector feet. Residual: JA1^2 - JB1^2.
ScenarioTrace incenter_equal_segments(const ShapeParams& p);
/// Square MNPQ with M, N on AB, P on BC, Q on AC, center O.
/// Residual: cos(ACO) - cos(BCO). Needs alpha, beta <= 90 deg.
ScenarioTrace inscribed_square(const ShapeParams& p);
/// Rectangle of height t*h (h the altitude from C), same residual as the square.
ScenarioTrace inscribed_rectangle(const ShapeParams& p, double t);
/// Residual: cos(BB1A1) - cos(30 deg). Records A' (A1 reflected in BB1).
ScenarioTrace bisector_30(const ShapeParams& p);

/// Lines of the shape plane that make up a conclusion set.
enum class Branch { Isosceles, Gamma60, Gamma90, Alpha120 };

const char* to_string(Branch b);
/// Euclidean distance in the (alpha, beta) plane from p to the branch line.
double branch_distance(Branch b, const ShapeParams& p);

struct ScenarioInfo {
  std::string name;
  kernels::Family family;
  /// Branches in tie-breaking order.
  std::vector<Branch> conclusion;
  /// Roots must lie in the conclusion set; otherwise they are only reported.
  bool containment_asserted;
  /// Upper bound on each base angle (the square needs both feet on AB).
  double max_base_angle;
};

const std::vector<ScenarioInfo>& scenario_registry();

class UnknownScenario : public std::invalid_argument {
 public:
  explicit UnknownScenario(std::string_view name);
};

const ScenarioInfo& find_scenario(std::string_view name);

struct ScanOptions {
  double grid_step = 0.25 * M_PI / 180.0;
  double refine_tol = 1e-12;
  double delta = 1e-6;
  /// Rectangle height fraction.
  double param = 0.5;
  /// Optional restriction of the scanned region (radians).
  std::optional<double> gamma_min;
  std::optional<double> gamma_max;
  /// Drop nodes with |alpha - beta| below this band (radians).
  double exclude_isosceles_band = 0.0;
  kernels::Isa isa = kernels::Isa::Auto;
};

struct ScanRoot {
  ShapeParams at;
  double residual;
  std::optional<Branch> branch;
  double distance;  // to the nearest conclusion branch
};

struct ScanReport {
  std::string scenario;
  double grid_step = 0.0;
  std::size_t nodes = 0;
  std::size_t sign_changes = 0;
  std::vector<ScanRoot> roots;            // sorted by (alpha, beta)
  std::vector<ScanRoot> discontinuities;  // sign flips that are not zeros
  std::vector<ScanRoot> violations;       // roots off the conclusion set
  std::map<std::string, std::size_t> branch_counts;
  /// Empty when the scenario's containment is not asserted.
  std::optional<bool> containment;
  double worst_residual = 0.0;
};

ScanReport level_set_scan(std::string_view scenario, const ScanOptions& options);

/// Seeded pointwise check of one implication over its hypothesis set.
struct ImplicationCheck {
  std::string name;
  bool gating = true;  // informational checks never fail a run
  std::size_t samples = 0;
  double worst_residual = 0.0;
  bool pass = true;
  std::vector<std::string> witnesses;
};

/// The forward implications attached to a scenario (samples per check).
std::vector<ImplicationCheck> forward_implications(std::string_view scenario, std::size_t samples,
                                                   std::uint64_t seed, double tol = 1e-9);

}  // namespace planicheck
