#include "polyinv/ineqinfer/ineqinfer.hpp"

#include <map>
#include <stdexcept>

namespace polyinv {
namespace {

/// Runs one probe `term <= value`; returns the max term value over cex traces.
std::optional<Int> probe(const OctTerm& term, const Int& value, CexOracle& oracle,
                         const LocationId& loc, const std::vector<std::string>& vars) {
  std::vector<Candidate> c{Candidate(OctConstraint{term, value})};
  VerifyResult vr = oracle.find_cex(loc, c, {});
  if (vr.cex_inputs.empty()) return std::nullopt;
  TraceSet ts = oracle.exec(loc, vr.cex_inputs);
  BoundOctTerm bt = BoundOctTerm::bind(term, vars);
  std::optional<Int> best;
  for (const auto& row : ts.rows()) {
    Int v = bt.eval(row);
    if (!best || v > *best) best = v;
  }
  // a cex whose traces cannot be replayed still refutes the probe
  if (!best) best = value + 1;
  return best;
}

}  // namespace

BoundResult find_upper_bound(const OctTerm& term, const Int& minV, const Int& maxV,
                             CexOracle& oracle, const LocationId& loc,
                             const std::vector<std::string>& vars) {
  if (minV > maxV) throw std::invalid_argument("bound search needs minV <= maxV");
  BoundResult res;
  Int lo = minV, hi = maxV;
  for (;;) {
    if (lo == hi) {
      res.k = hi;
      break;
    }
    if (hi - lo == 1) {
      auto obs = probe(term, lo, oracle, loc, vars);
      res.probes.push_back({lo, obs.has_value(), obs});
      if (obs && *obs > hi) {
        res.status = BoundResult::Status::UnboundedInRange;
        break;
      }
      res.k = obs ? hi : lo;
      break;
    }
    Int mid = ceil_half(hi + lo);
    auto obs = probe(term, mid, oracle, loc, vars);
    res.probes.push_back({mid, obs.has_value(), obs});
    if (!obs) {
      hi = mid;
    } else if (*obs > hi) {
      res.status = BoundResult::Status::UnboundedInRange;
      break;
    } else {
      lo = *obs;
    }
  }
  res.lo = lo;
  res.hi = hi;
  return res;
}

BoundResult find_lower_bound(const OctTerm& term, const Int& minV, const Int& maxV,
                             CexOracle& oracle, const LocationId& loc,
                             const std::vector<std::string>& vars) {
  BoundResult r = find_upper_bound(term.negated(), -maxV, -minV, oracle, loc, vars);
  r.k = -r.k;
  Int lo = -r.hi, hi = -r.lo;
  r.lo = lo;
  r.hi = hi;
  return r;
}

OctInferResult infer_octagons(const Program& p, const LocationId& loc, CexOracle& oracle,
                              const OctInferConfig& cfg, const TraceSet* seed) {
  const LocationInfo& info = p.location(loc);
  if (cfg.min_value > cfg.max_value) throw std::invalid_argument("empty octagon range");
  OctInferResult res;
  if (info.vars.empty()) return res;

  std::vector<OctTerm> terms = enumerate_oct_terms(info.vars);
  std::vector<std::optional<Int>> seen(terms.size());
  if (seed) {
    if (seed->vars() != info.vars) throw std::invalid_argument("seed traces use other variables");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      BoundOctTerm bt = BoundOctTerm::bind(terms[i], info.vars);
      for (const auto& row : seed->rows()) {
        Int v = bt.eval(row);
        if (!seen[i] || v > *seen[i]) seen[i] = v;
      }
    }
  }

  res.terms.resize(terms.size());
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    res.terms[i].term = terms[i];
    if (seen[i] && *seen[i] > cfg.max_value) {
      res.terms[i].prefiltered = true;
      res.terms[i].result.status = BoundResult::Status::UnboundedInRange;
    } else {
      live.push_back(i);
    }
  }

  if (!live.empty()) {
    std::vector<Candidate> batch;
    for (auto i : live) batch.emplace_back(OctConstraint{terms[i], cfg.max_value});
    oracle.find_cex(loc, batch, {});
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < live.size(); ++j) {
      if (batch[j].stat == CandStat::Disproved) {
        res.terms[live[j]].prefiltered = true;
        res.terms[live[j]].result.status = BoundResult::Status::UnboundedInRange;
      } else {
        kept.push_back(live[j]);
      }
    }
    live = std::move(kept);
  }

  for (auto i : live) {
    Int lo = cfg.min_value;
    if (seen[i] && *seen[i] > lo) lo = *seen[i];
    BoundResult br = find_upper_bound(terms[i], lo, cfg.max_value, oracle, loc, info.vars);
    res.probes += br.probes.size();
    if (br.bounded()) res.constraints.push_back({terms[i], br.k});
    res.terms[i].result = std::move(br);
  }
  for (const auto& t : res.terms)
    if (t.prefiltered) ++res.prefilter_refuted;
  return res;
}

}  // namespace polyinv
