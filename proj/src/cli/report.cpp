#include "polyinv/cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace polyinv {

using nlohmann::ordered_json;

ordered_json config_json(const Config& c) {
  ordered_json j;
  j["alpha"] = c.alpha;
  j["degree"] = c.degree ? ordered_json(*c.degree) : ordered_json(nullptr);
  j["oct_range"] = c.oct_range;
  j["mode"] = to_string(c.mode);
  j["budget"] = c.budget ? ordered_json(*c.budget) : ordered_json(nullptr);
  j["seed"] = c.seed;
  j["locations"] = c.locations;
  j["wrap64"] = c.wrap64;
  j["max_cex"] = c.max_cex;
  j["max_iterations"] = c.max_iterations;
  return j;
}

ordered_json to_json(const Report& r, bool timings) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["program"] = r.program;
  j["config"] = config_json(r.config);
  if (!r.mode.empty()) {
    j["verifier"] = {{"mode", r.mode},
                     {"inputs_per_call", r.sweep},
                     {"calls", r.verifier_calls},
                     {"cex_returned", r.cex_returned}};
  }
  ordered_json locs = ordered_json::array();
  for (const auto& l : r.locations) {
    ordered_json o;
    o["location"] = l.loc.label;
    o["vars"] = l.vars;
    o["status"] = l.status;
    o["verified"] = l.verified;
    o["degree"] = l.degree;
    o["terms"] = l.terms;
    o["traces"] = l.traces;
    ordered_json eqs = ordered_json::array();
    for (const auto& e : l.equalities) eqs.push_back(e.to_string());
    o["equalities"] = eqs;
    ordered_json octs = ordered_json::array();
    for (const auto& c : l.octagons) octs.push_back(c.to_string());
    o["octagons"] = octs;
    o["stats"] = {{"raw_equalities", l.raw_equalities},
                  {"raw_octagons", l.raw_octagons},
                  {"first_solve_candidates", l.first_candidates},
                  {"eq_iterations", l.eq_iterations},
                  {"cex_inputs", l.cex_inputs},
                  {"oct_probes", l.oct_probes},
                  {"oct_prefilter_refuted", l.prefilter_refuted},
                  {"degree_reduced", l.degree_reduced},
                  {"accepted_on_box", l.accepted_on_box}};
    o["residual"] = {{"traces", l.residual_traces}, {"violations", l.residual_violations}};
    if (timings) o["ms"] = l.ms;
    locs.push_back(std::move(o));
  }
  j["locations"] = locs;
  if (timings) j["ms"] = r.ms;
  return j;
}

std::string to_text(const Report& r, bool timings) {
  std::ostringstream os;
  os << "program " << r.program;
  if (!r.mode.empty()) os << "  (verifier: " << r.mode << ", " << r.sweep << " inputs per call)";
  os << "\n";
  for (const auto& l : r.locations) {
    os << "\n" << l.loc.label << " [";
    for (std::size_t i = 0; i < l.vars.size(); ++i) os << (i ? ", " : "") << l.vars[i];
    os << "]";
    if (l.status != "ok") os << "  " << l.status;
    os << "\n";
    if (l.degree > 0)
      os << "  degree " << l.degree << ", " << l.terms << " terms, " << l.traces << " traces";
    if (l.verified) os << ", " << l.eq_iterations << " refinement rounds";
    else os << ", unverified";
    os << "\n";
    for (const auto& e : l.equalities) os << "  " << e.to_string() << "\n";
    for (const auto& c : l.octagons) os << "  " << c.to_string() << "\n";
    if (l.residual_violations)
      os << "  warning: " << l.residual_violations << " residual violations\n";
    if (timings) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.1f", l.ms);
      os << "  time " << buf << " ms\n";
    }
  }
  if (timings && r.mode.size()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", r.ms);
    os << "\nverifier calls " << r.verifier_calls << ", runs " << r.verifier_runs << ", total "
       << buf << " ms\n";
  }
  return os.str();
}

}  // namespace polyinv
