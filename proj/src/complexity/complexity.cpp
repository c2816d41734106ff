#include "polyinv/complexity/complexity.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace polyinv {

std::optional<CounterRelation> select_counter_relation(const std::vector<Equality>& eqs,
                                                       const std::string& counter) {
  std::optional<CounterRelation> best;
  for (const auto& e : eqs) {
    int ti = e.poly().var_index(counter);
    if (ti < 0 || !e.poly().uses(ti)) continue;
    int deg = e.poly().degree_in(ti);
    bool better = !best;
    if (best) {
      const auto& b = best->relation;
      if (deg != best->t_degree) better = deg > best->t_degree;
      else if (e.poly().size() != b.poly().size()) better = e.poly().size() < b.poly().size();
      else better = e < b;
    }
    if (better) best = CounterRelation{e, counter, deg};
  }
  return best;
}

CounterInference infer_counter_relation(const Program& p, const VerifyBudget& budget,
                                        const ComplexityConfig& cfg, const RunOptions& run,
                                        unsigned jobs) {
  Program inst = instrument_counter(p, false, cfg.counter);
  CounterInference out;
  out.exit = *exit_location(inst);
  const LocationInfo& info = inst.location(out.exit);

  std::vector<std::string> vars{cfg.counter};
  for (const auto& in : inst.inputs())
    if (std::find(info.vars.begin(), info.vars.end(), in.name) != info.vars.end())
      vars.push_back(in.name);
  std::sort(vars.begin(), vars.end());

  Verifier v(inst, budget, run, jobs);
  EqInferConfig ec = cfg.eq;
  ec.vars = vars;
  out.inference = infer_equalities(inst, out.exit, v, ec);
  out.status = out.inference.status;
  out.equalities = out.inference.equalities;
  out.relation = select_counter_relation(out.equalities, cfg.counter);

  out.traces = TraceSet(out.exit, vars);
  const TraceSet& all = v.observed(out.exit);
  std::vector<std::size_t> proj;
  for (const auto& name : vars) proj.push_back(static_cast<std::size_t>(all.var_index(name)));
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<Int> row;
    for (auto j : proj) row.push_back(all.row(i)[j]);
    out.traces.add(std::move(row), all.origin(i));
  }

  // drop counter factors the traces do not need
  while (out.relation) {
    const Polynomial& rp = out.relation->relation.poly();
    if (rp.vars() != vars) break;
    Polynomial t = Polynomial::variable(vars, cfg.counter);
    auto q = divide_exact(rp, t);
    if (!q || q->is_constant()) break;
    Equality reduced = Equality::from_polynomial(*q);
    bool ok = true;
    for (const auto& row : out.traces.rows())
      if (!reduced.holds(row)) {
        ok = false;
        break;
      }
    if (!ok) break;
    int ti = q->var_index(cfg.counter);
    if (!q->uses(ti)) break;
    out.relation = CounterRelation{reduced, cfg.counter, q->degree_in(ti)};
  }
  return out;
}

namespace {

Polynomial drop_var(const Polynomial& p, std::size_t var, const std::vector<std::string>& rest) {
  Polynomial out(rest);
  for (const auto& [m, c] : p.terms()) {
    Monomial r(rest.size());
    for (std::size_t i = 0, j = 0; i < m.exp.size(); ++i) {
      if (i == var) continue;
      r.exp[j++] = m.exp[i];
    }
    out.add_term(r, c);
  }
  return out;
}

}  // namespace

BoundExtraction extract_bounds(const CounterRelation& rel, const TraceSet& traces,
                               const ComplexityConfig& cfg) {
  BoundExtraction out;
  const Polynomial& full = rel.relation.poly();
  const auto& vars = full.vars();
  const int ti = full.var_index(rel.counter);
  if (ti < 0) throw std::invalid_argument("relation does not mention the counter");
  std::vector<std::string> in_vars;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (static_cast<int>(i) != ti) in_vars.push_back(vars[i]);
  const Polynomial t = Polynomial::variable(vars, rel.counter);

  // factor out t^k
  int k = full.degree_in(ti);
  for (const auto& [m, c] : full.terms()) k = std::min(k, m.exp[ti]);
  Polynomial P(vars);
  for (const auto& [m, c] : full.terms()) {
    Monomial r = m;
    r.exp[ti] -= k;
    P.add_term(r, c);
  }
  out.t_power = k;
  if (k >= 1) out.bounds.push_back(Polynomial(in_vars));

  std::vector<Polynomial> factors;  // with multiplicity, over vars
  auto accept = [&](const Polynomial& g_full) {
    Polynomial f = t - g_full;
    bool any = false;
    while (P.degree_in(ti) >= 1) {
      auto q = divide_exact(P, f);
      if (!q) break;
      P = *q;
      factors.push_back(f);
      any = true;
    }
    if (any) out.bounds.push_back(drop_var(g_full, ti, in_vars));
    return any;
  };

  // trace rows over (inputs..., t) in relation order
  std::vector<std::vector<Int>> active;
  std::vector<int> map;
  for (const auto& v : vars) map.push_back(traces.var_index(v));
  if (std::find(map.begin(), map.end(), -1) == map.end())
    for (const auto& row : traces.rows()) {
      std::vector<Int> r;
      for (int j : map) r.push_back(row[j]);
      active.push_back(std::move(r));
    }
  auto explained_by = [&](const Polynomial& g_full, const std::vector<Int>& r) {
    return g_full.eval(r) == Rational(r[ti]);
  };
  if (k >= 1) {
    std::erase_if(active, [&](const auto& r) { return sgn(r[ti]) == 0; });
  }

  std::mt19937_64 rng(cfg.seed ^ 0x5bd1e995ULL);
  std::size_t attempts = 0;
  while (P.degree_in(ti) >= 1) {
    auto cs = P.coefficients_in(ti);
    if (cs.size() == 2) {
      // c1 * t + c0
      std::optional<Polynomial> g;
      if (cs[1].is_constant()) g = cs[0] * Rational(-1 / cs[1].coeff(Monomial(vars.size())));
      else if (auto q = divide_exact(cs[0], cs[1])) g = -*q;
      if (!g || !accept(*g)) break;
      continue;
    }
    bool found = false;
    while (!found && attempts < cfg.max_subsets && !active.empty()) {
      ++attempts;
      const auto& anchor = active[std::uniform_int_distribution<std::size_t>(0, active.size() - 1)(rng)];
      std::vector<std::pair<Int, std::uint64_t>> key(active.size());
      for (std::size_t i = 0; i < active.size(); ++i) {
        Int d = 0;
        for (std::size_t j = 0; j < vars.size(); ++j)
          if (static_cast<int>(j) != ti) d += abs(active[i][j] - anchor[j]);
        key[i] = {d, rng()};
      }
      std::vector<std::size_t> order(active.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });

      for (int deg = 1; deg <= cfg.max_root_degree && !found; ++deg) {
        auto gterms = monomials_up_to(vars.size(), deg);
        std::erase_if(gterms, [&](const Monomial& m) { return m.exp[ti] != 0; });
        std::size_t need = gterms.size() + 2;
        if (active.size() < need) continue;
        std::vector<IntVec> rows;
        for (std::size_t s = 0; s < need; ++s) {
          const auto& r = active[order[s]];
          IntVec row = instantiate(gterms, r);
          row.push_back(r[ti]);
          rows.push_back(std::move(row));
        }
        auto basis = nullspace(rows, gterms.size() + 1);
        if (basis.size() != 1 || basis[0].back() == 0) continue;
        const RatVec& v = basis[0];
        Polynomial g(vars);
        for (std::size_t j = 0; j < gterms.size(); ++j) g.add_term(gterms[j], -v[j] / v.back());
        if (accept(g)) {
          found = true;
          std::erase_if(active, [&](const auto& r) { return explained_by(g, r); });
        }
      }
    }
    if (!found) break;
  }
  out.residual = P;

  Polynomial prod = t.pow(static_cast<unsigned>(k)) * P;
  for (const auto& f : factors) prod = prod * f;
  out.identity_holds = (prod - full).is_zero();
  return out;
}

}  // namespace polyinv
