#include "polyinv/eqinfer/eqinfer.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyinv {

int auto_degree(std::size_t nvars, std::uint64_t alpha) {
  int d = 1;
  while (term_count(nvars, d + 1) <= alpha) ++d;
  return d;
}

std::vector<Monomial> create_terms(const std::vector<std::string>& vars, int d) {
  if (vars.empty()) throw std::invalid_argument("create_terms needs at least one variable");
  if (d < 1) throw std::invalid_argument("create_terms needs degree >= 1");
  return monomials_up_to(vars.size(), d);
}

std::vector<RatVec> solve(const std::vector<IntVec>& rows, std::size_t ncols) {
  return nullspace(rows, ncols);
}

std::vector<Equality> extract_eqts(const std::vector<RatVec>& basis,
                                   const std::vector<std::string>& vars,
                                   const std::vector<Monomial>& terms) {
  std::vector<Equality> out;
  for (const auto& v : basis) {
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) continue;
    out.push_back(Equality::from_vector(vars, terms, v));
  }
  return out;
}

namespace {

RatVec coeff_vector(const Equality& e, const std::vector<std::string>& vars,
                    const std::vector<Monomial>& terms) {
  Equality be = e.embed(vars);
  RatVec v(terms.size());
  std::size_t found = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    v[i] = be.poly().coeff(terms[i]);
    if (v[i] != 0) ++found;
  }
  if (found != be.poly().size()) throw std::invalid_argument("equality exceeds the term basis");
  return v;
}

}  // namespace

std::vector<Equality> reduced_basis(const std::vector<Equality>& eqs,
                                    const std::vector<std::string>& vars,
                                    const std::vector<Monomial>& terms) {
  // columns reversed so that pivots land on leading terms
  const std::size_t n = terms.size();
  RrefBuilder b(n);
  for (const auto& e : eqs) {
    RatVec v = coeff_vector(e, vars, terms);
    std::reverse(v.begin(), v.end());
    b.add(std::move(v));
  }
  std::vector<Equality> out;
  for (RatVec v : b.rows()) {
    std::reverse(v.begin(), v.end());
    out.push_back(Equality::from_vector(vars, terms, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(EqStatus s) {
  switch (s) {
    case EqStatus::Ok: return "ok";
    case EqStatus::Unreachable: return "unreachable";
    case EqStatus::NotEnoughTraces: return "not-enough-traces";
  }
  return "?";
}

namespace {

class Gatherer {
 public:
  Gatherer(const LocationInfo& info, const std::vector<std::string>& vars, EqInferResult& res)
      : res_(res) {
    for (const auto& v : vars) {
      auto it = std::find(info.vars.begin(), info.vars.end(), v);
      if (it == info.vars.end())
        throw std::invalid_argument("variable '" + v + "' is not in scope at " + info.id.label);
      proj_.push_back(static_cast<std::size_t>(it - info.vars.begin()));
    }
  }

  /// Adds projected traces; returns the new rows in insertion order.
  std::vector<std::vector<Int>> add(const TraceSet& ts) {
    std::vector<std::vector<Int>> fresh;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::vector<Int> pt;
      pt.reserve(proj_.size());
      for (auto j : proj_) pt.push_back(ts.row(i)[j]);
      if (res_.traces.add(pt, ts.origin(i))) fresh.push_back(std::move(pt));
    }
    return fresh;
  }

 private:
  EqInferResult& res_;
  std::vector<std::size_t> proj_;
};

bool in_span(const RrefBuilder& b, const Equality& e, const std::vector<std::string>& vars,
             const std::vector<Monomial>& terms) {
  return b.in_span(coeff_vector(e, vars, terms));
}

}  // namespace

EqInferResult infer_equalities(const Program& p, const LocationId& loc, CexOracle& oracle,
                               const EqInferConfig& cfg) {
  const LocationInfo& info = p.location(loc);
  EqInferResult res;
  res.vars = cfg.vars ? *cfg.vars : info.vars;
  std::sort(res.vars.begin(), res.vars.end());
  res.traces = TraceSet(loc, res.vars);
  if (res.vars.empty()) {
    res.status = EqStatus::NotEnoughTraces;
    return res;
  }
  Gatherer gather(info, res.vars, res);

  res.degree = cfg.degree ? *cfg.degree : auto_degree(res.vars.size(), cfg.alpha);
  std::vector<Monomial> terms = create_terms(res.vars, res.degree);
  auto sys = std::make_unique<EqSystem>(terms);

  auto absorb = [&](const std::vector<Input>& ins) {
    for (const auto& in : ins) res.inputs.insert(in);
    for (auto& pt : gather.add(oracle.exec(loc, ins))) sys->add_point(pt);
  };

  // gather an initial batch of traces reaching loc
  bool swept = false;
  for (;;) {
    std::size_t n = terms.size();
    std::size_t target = std::max(n + 10, 2 * n - std::min(n, sys->rank()));
    if (res.traces.size() >= target) break;
    std::vector<Candidate> c{Candidate(FalsePredicate{})};
    VerifyResult vr = oracle.find_cex(loc, c, res.inputs);
    if (vr.cex_inputs.empty()) {
      swept = vr.box_complete;
      break;
    }
    absorb(vr.cex_inputs);
  }

  if (res.traces.empty()) {
    res.status = res.inputs.empty() ? EqStatus::Unreachable : EqStatus::NotEnoughTraces;
    return res;
  }
  if (res.traces.size() < terms.size()) {
    if (!(swept && cfg.allow_degree_fallback)) {
      res.status = EqStatus::NotEnoughTraces;
      return res;
    }
    int d = 1;
    while (term_count(res.vars.size(), d + 1) <= res.traces.size()) ++d;
    if (d < res.degree) {
      res.degree = d;
      res.degree_reduced = true;
      terms = create_terms(res.vars, d);
      sys = std::make_unique<EqSystem>(terms);
      for (const auto& row : res.traces.rows()) sys->add_point(row);
    }
  }
  res.term_count = terms.size();

  std::vector<Equality> invs;
  RrefBuilder inv_span(terms.size());
  std::vector<Equality> cands = extract_eqts(sys->solve(), res.vars, terms);
  res.first_solve_candidates = cands.size();
  bool all_on_box = true;

  while (!cands.empty() && res.iterations < cfg.max_iterations) {
    ++res.iterations;
    std::vector<Candidate> cc;
    for (auto& e : cands) cc.emplace_back(e.embed(info.vars));
    VerifyResult vr = oracle.find_cex(loc, cc, res.inputs);
    for (std::size_t i = 0; i < cc.size(); ++i) {
      if (cc[i].stat == CandStat::Disproved) continue;
      if (!cc[i].accepted_on_box) all_on_box = false;
      invs.push_back(cands[i]);
      inv_span.add(coeff_vector(cands[i], res.vars, terms));
    }
    if (vr.cex_inputs.empty()) break;
    res.cex_inputs += vr.cex_inputs.size();
    absorb(vr.cex_inputs);
    std::vector<Equality> next;
    for (auto& e : extract_eqts(sys->solve(), res.vars, terms))
      if (!in_span(inv_span, e, res.vars, terms)) next.push_back(std::move(e));
    cands = std::move(next);
  }

  res.equalities = reduced_basis(invs, res.vars, terms);
  res.accepted_on_box = all_on_box && oracle.exhaustive();
  return res;
}

}  // namespace polyinv
