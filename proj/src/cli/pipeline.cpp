#include "polyinv/cli/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace polyinv {
namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<LocationId> selected(const Program& p, const Config& cfg) {
  std::vector<LocationId> out;
  if (cfg.locations.empty()) {
    for (const auto& l : p.locations()) out.push_back(l.id);
    return out;
  }
  for (const auto& name : cfg.locations) {
    LocationId id(name);
    if (!p.has_location(id))
      throw std::invalid_argument("program '" + p.name() + "' has no location '" + name + "'");
  }
  for (const auto& l : p.locations())
    if (std::find(cfg.locations.begin(), cfg.locations.end(), l.id.label) != cfg.locations.end())
      out.push_back(l.id);
  return out;
}

}  // namespace

std::size_t residual_violations(const TraceSet& traces, const std::vector<Equality>& eqs,
                                const std::vector<OctConstraint>& octs) {
  std::size_t bad = 0;
  std::vector<Equality> be;
  for (const auto& e : eqs) be.push_back(e.embed(traces.vars()));
  std::vector<BoundOctTerm> bo;
  for (const auto& c : octs) bo.push_back(BoundOctTerm::bind(c.term, traces.vars()));
  for (const auto& row : traces.rows()) {
    for (const auto& e : be)
      if (!e.holds(row)) ++bad;
    for (std::size_t i = 0; i < octs.size(); ++i)
      if (bo[i].eval(row) > octs[i].k) ++bad;
  }
  return bad;
}

Report run_infer(const Program& p, const Config& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.program = p.name();
  rep.config = cfg;
  auto locs = selected(p, cfg);

  Verifier v(p, cfg.verify_budget(), cfg.run_options(), cfg.jobs);
  rep.mode = to_string(v.mode());
  rep.sweep = v.sweep_size();

  for (const auto& loc : locs) {
    const auto tl = std::chrono::steady_clock::now();
    LocationReport lr;
    lr.loc = loc;
    lr.vars = p.location(loc).vars;
    EqInferResult eq = infer_equalities(p, loc, v, cfg.eq_config());
    lr.status = to_string(eq.status);
    lr.degree = eq.degree;
    lr.terms = eq.term_count;
    lr.traces = eq.traces.size();
    lr.first_candidates = eq.first_solve_candidates;
    lr.eq_iterations = eq.iterations;
    lr.cex_inputs = eq.cex_inputs;
    lr.degree_reduced = eq.degree_reduced;
    lr.accepted_on_box = eq.accepted_on_box;
    if (eq.status == EqStatus::Unreachable) {
      lr.ms = ms_since(tl);
      rep.locations.push_back(std::move(lr));
      continue;
    }
    OctInferResult oct = infer_octagons(p, loc, v, cfg.oct_config(), &eq.traces);
    lr.oct_probes = oct.probes;
    lr.prefilter_refuted = oct.prefilter_refuted;
    lr.raw_equalities = eq.equalities.size();
    lr.raw_octagons = oct.constraints.size();
    InvariantSet simplified = remove_redundant({eq.equalities, oct.constraints});
    lr.equalities = std::move(simplified.equalities);
    lr.octagons = std::move(simplified.octagons);
    const TraceSet& seen = v.observed(loc);
    lr.residual_traces = seen.size();
    lr.residual_violations = residual_violations(seen, lr.equalities, lr.octagons);
    lr.ms = ms_since(tl);
    rep.locations.push_back(std::move(lr));
  }
  rep.verifier_calls = v.stats().calls;
  rep.verifier_runs = v.stats().runs;
  rep.cex_returned = v.stats().cex_returned;
  rep.ms = ms_since(t0);
  return rep;
}

Report run_traces(const std::vector<TraceSet>& sets, const Config& cfg, const std::string& name) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "traces";
  rep.program = name;
  rep.config = cfg;
  for (const auto& ts : sets) {
    if (!cfg.locations.empty() &&
        std::find(cfg.locations.begin(), cfg.locations.end(), ts.location().label) ==
            cfg.locations.end())
      continue;
    const auto tl = std::chrono::steady_clock::now();
    LocationReport lr;
    lr.loc = ts.location();
    lr.vars = ts.vars();
    lr.verified = false;
    lr.traces = ts.size();
    std::vector<Equality> eqs;
    if (!ts.vars().empty()) {
      lr.degree = cfg.degree ? *cfg.degree : auto_degree(ts.vars().size(), cfg.alpha);
      auto terms = create_terms(ts.vars(), lr.degree);
      lr.terms = terms.size();
      if (ts.size() < terms.size()) {
        lr.status = to_string(EqStatus::NotEnoughTraces);
      } else {
        EqSystem sys(terms);
        for (const auto& row : ts.rows()) sys.add_point(row);
        eqs = extract_eqts(sys.solve(), ts.vars(), terms);
        lr.first_candidates = eqs.size();
      }
    }
    std::vector<OctConstraint> octs;
    if (!ts.empty()) {
      for (const auto& term : enumerate_oct_terms(ts.vars())) {
        BoundOctTerm bt = BoundOctTerm::bind(term, ts.vars());
        Int best = bt.eval(ts.row(0));
        for (const auto& row : ts.rows()) best = std::max(best, bt.eval(row));
        if (best <= cfg.oct_range && best >= -cfg.oct_range) octs.push_back({term, best});
      }
    }
    lr.raw_equalities = eqs.size();
    lr.raw_octagons = octs.size();
    InvariantSet simplified = remove_redundant({eqs, octs});
    lr.equalities = std::move(simplified.equalities);
    lr.octagons = std::move(simplified.octagons);
    lr.residual_traces = ts.size();
    lr.residual_violations = residual_violations(ts, lr.equalities, lr.octagons);
    lr.ms = ms_since(tl);
    rep.locations.push_back(std::move(lr));
  }
  rep.ms = ms_since(t0);
  return rep;
}

ComplexityReport run_complexity(const Program& p, const Config& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  ComplexityReport rep;
  rep.program = p.name();
  rep.config = cfg;
  ComplexityConfig cc;
  cc.eq = cfg.eq_config();
  cc.seed = cfg.seed;
  CounterInference ci = infer_counter_relation(p, cfg.verify_budget(), cc, cfg.run_options(), cfg.jobs);
  rep.status = ci.status;
  rep.exit = ci.exit;
  rep.vars = ci.traces.vars();
  rep.relation = ci.relation;
  rep.traces = ci.traces.size();
  if (ci.relation) rep.bounds = extract_bounds(*ci.relation, ci.traces, cc);
  rep.ms = ms_since(t0);
  return rep;
}

nlohmann::ordered_json to_json(const ComplexityReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "complexity";
  j["program"] = r.program;
  j["config"] = config_json(r.config);
  j["exit"] = r.exit.label;
  j["vars"] = r.vars;
  j["status"] = to_string(r.status);
  j["traces"] = r.traces;
  if (r.relation) {
    j["relation"] = r.relation->relation.to_poly_string() + " == 0";
    j["t_degree"] = r.relation->t_degree;
    nlohmann::ordered_json b = nlohmann::ordered_json::array();
    for (const auto& g : r.bounds.bounds) b.push_back(g.to_string());
    j["bounds"] = b;
    j["residual"] = r.bounds.residual.to_string();
    j["identity_holds"] = r.bounds.identity_holds;
  } else {
    j["relation"] = nullptr;
  }
  if (timings) j["ms"] = r.ms;
  return j;
}

std::string to_text(const ComplexityReport& r, bool timings) {
  std::ostringstream os;
  os << "program " << r.program << "  exit " << r.exit.label << "  (" << r.traces
     << " exit traces)\n";
  if (!r.relation) {
    os << "no counter relation found (" << to_string(r.status) << ")\n";
    return os.str();
  }
  os << "relation: " << r.relation->relation.to_poly_string() << " == 0\n";
  os << "bounds:";
  if (r.bounds.bounds.empty()) os << " none";
  os << "\n";
  for (const auto& g : r.bounds.bounds) os << "  " << r.relation->counter << " = " << g.to_string() << "\n";
  if (!r.bounds.residual.is_constant())
    os << "unfactored: " << r.bounds.residual.to_string() << "\n";
  os << "identity " << (r.bounds.identity_holds ? "verified" : "FAILED") << "\n";
  if (timings) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", r.ms);
    os << "time " << buf << " ms\n";
  }
  return os.str();
}

}  // namespace polyinv
