#include <cmath>
#include <cstdio>
#include <sstream>

#include "planicheck/cli.hpp"

namespace planicheck::cli {

using nlohmann::json;

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

bool Report::pass() const {
  for (const auto& c : checks) {
    if (c.gating && !c.pass) return false;
  }
  return containment.value_or(true);
}

int exit_code(const Report& r) { return r.pass() ? 0 : 1; }

json report_body(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"gating", c.gating},
                      {"samples", c.samples},
                      {"worst_residual", number(c.worst_residual)},
                      {"counts", c.counts},
                      {"witnesses", c.witnesses}});
  }
  json out = {{"version", kVersion},
              {"command", r.command},
              {"config", r.config},
              {"checks", checks},
              {"pass", r.pass()},
              {"warnings", r.warnings}};
  if (r.containment) out["containment"] = *r.containment;
  for (const auto& [k, v] : r.extra.items()) out[k] = v;
  return out;
}

std::string render_json(const Report& r) {
  json out = report_body(r);
  out["wall_time_s"] = number(r.wall_time_s);
  return out.dump(2) + "\n";
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string render_markdown(const Report& r) {
  std::ostringstream os;
  os << "# planicheck " << r.command << "\n\n";
  os << "version " << kVersion << ", " << (r.pass() ? "PASS" : "FAIL") << "\n\n";
  os << "## Config\n\n";
  for (const auto& [k, v] : r.config.items()) os << "- " << k << ": " << scalar_text(v) << "\n";
  for (const auto& w : r.warnings) os << "\n> warning: " << w << "\n";
  if (!r.checks.empty()) {
    os << "\n## Checks\n\n| check | result | samples | worst residual |\n|---|---|---|---|\n";
    for (const auto& c : r.checks) {
      os << "| " << c.name << (c.gating ? "" : " (info)") << " | " << (c.pass ? "pass" : "FAIL") << " | "
         << c.samples << " | " << number(c.worst_residual).dump() << " |\n";
    }
    for (const auto& c : r.checks) {
      if (c.witnesses.empty()) continue;
      os << "\nWitnesses for " << c.name << ":\n\n";
      for (const auto& w : c.witnesses) os << "- " << w << "\n";
    }
  }
  if (r.containment) os << "\nContainment: " << (*r.containment ? "true" : "false") << "\n";
  for (const auto& [k, v] : r.extra.items()) {
    if (k == "roots") {
      os << "\n## Roots (" << v.size() << ")\n\n| alpha | beta | gamma | residual | branch |\n|---|---|---|---|---|\n";
      for (const auto& root : v) {
        os << "| " << root["alpha_deg"].dump() << " | " << root["beta_deg"].dump() << " | "
           << root["gamma_deg"].dump() << " | " << root["residual"].dump() << " | "
           << scalar_text(root["branch"]) << " |\n";
      }
    } else {
      os << "\n## " << k << "\n\n```json\n" << v.dump(2) << "\n```\n";
    }
  }
  os << "\nwall time: " << number(r.wall_time_s).dump() << " s\n";
  return os.str();
}

std::string render(const Report& r, Format f) { return f == Format::Json ? render_json(r) : render_markdown(r); }

}  // namespace planicheck::cli
