#include "polyinv/simplify/simplify.hpp"

#include "polyinv/simplify/octagon_closure.hpp"

#include <algorithm>
#include <set>

namespace polyinv {

IdealSpan::IdealSpan(std::vector<std::string> vars, int cap)
    : vars_(std::move(vars)), cap_(cap), terms_(monomials_up_to(vars_.size(), std::max(cap, 0))) {
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], static_cast<int>(i));
  pivots_.resize(terms_.size());
}

bool IdealSpan::load(const Polynomial& p, const Monomial* shift,
                     std::vector<std::uint64_t>& dense) const {
  dense.assign(terms_.size(), 0);
  for (const auto& [m, c] : p.terms()) {
    auto it = index_.find(shift ? m * *shift : m);
    if (it == index_.end()) return false;
    dense[it->second] = modp::from_rational(c);
  }
  return true;
}

long IdealSpan::reduce(std::vector<std::uint64_t>& dense) const {
  for (std::size_t j = dense.size(); j-- > 0;) {
    if (dense[j] == 0) continue;
    const Row& piv = pivots_[j];
    if (piv.empty()) return static_cast<long>(j);
    std::uint64_t f = dense[j];
    for (const auto& [k, c] : piv) dense[k] = modp::sub(dense[k], modp::mul(f, c));
  }
  return -1;
}

void IdealSpan::add(const Equality& e) {
  Polynomial p = e.poly().embed(vars_);
  int room = cap_ - p.degree();
  if (room < 0) return;
  std::vector<std::uint64_t> dense;
  for (const auto& m : monomials_up_to(vars_.size(), room)) {
    load(p, &m, dense);
    long j = reduce(dense);
    if (j < 0) continue;
    std::uint64_t inv = modp::inv(dense[j]);
    Row r;
    for (long k = 0; k <= j; ++k)
      if (dense[k]) r.emplace_back(static_cast<int>(k), modp::mul(dense[k], inv));
    pivots_[j] = std::move(r);
    ++rank_;
  }
}

bool IdealSpan::contains(const Polynomial& p) const {
  Polynomial q = p.embed(vars_);
  std::vector<std::uint64_t> dense;
  if (!load(q, nullptr, dense)) return false;
  return reduce(dense) < 0;
}

bool IdealSpan::contains(const Equality& e) const { return contains(e.poly()); }

namespace {

std::vector<std::string> all_vars(const std::vector<Equality>& eqs, const Equality* extra) {
  std::vector<std::string> v;
  for (const auto& e : eqs) v = merge_vars(v, e.vars());
  if (extra) v = merge_vars(v, extra->vars());
  return v;
}

/// Octagons implied directly by a linear equality.
std::vector<OctConstraint> octagons_of(const Equality& e) {
  const Polynomial& p = e.poly();
  if (p.degree() != 1) return {};
  auto le = OctConstraint::from_polynomial_le0(p);
  auto ge = OctConstraint::from_polynomial_le0(-p);
  if (!le || !ge) return {};
  // both directions must be exact (no rounding)
  Rational c0 = p.coeff(Monomial(p.vars().size()));
  Rational mag = 0;
  for (const auto& [m, c] : p.terms())
    if (!m.is_constant()) mag = abs(c);
  Rational q = c0 / mag;
  if (q.get_den() != 1) return {};
  return {*le, *ge};
}

bool implied_by(const std::vector<OctConstraint>& octs, const std::vector<Equality>& eqs,
                const OctConstraint& cand) {
  std::set<std::string> names;
  auto note = [&](const OctConstraint& c) {
    names.insert(c.term.v1);
    if (c.term.is_pair()) names.insert(c.term.v2);
  };
  std::vector<OctConstraint> all = octs;
  for (const auto& e : eqs)
    for (auto& c : octagons_of(e)) all.push_back(std::move(c));
  for (const auto& c : all) note(c);
  note(cand);
  OctagonDbm dbm(std::vector<std::string>(names.begin(), names.end()));
  for (const auto& c : all) dbm.add(c);
  dbm.close();
  return dbm.entails(cand);
}

}  // namespace

bool is_implied_eq(const std::vector<Equality>& others, const Equality& cand, int d) {
  IdealSpan span(all_vars(others, &cand), 2 * d);
  for (const auto& e : others) span.add(e);
  return span.contains(cand);
}

bool is_implied_oct(const InvariantSet& others, const OctConstraint& cand) {
  return implied_by(others.octagons, others.equalities, cand);
}

InvariantSet remove_redundant(const InvariantSet& set) {
  InvariantSet out;

  std::vector<Equality> eqs = set.equalities;
  std::sort(eqs.begin(), eqs.end());
  eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
  if (!eqs.empty()) {
    int maxdeg = 0;
    for (const auto& e : eqs) maxdeg = std::max(maxdeg, e.degree());
    const int cap = 2 * maxdeg;
    const auto vars = all_vars(eqs, nullptr);
    IdealSpan span(vars, cap);
    std::vector<Equality> kept;
    for (const auto& e : eqs) {
      if (span.contains(e)) continue;
      span.add(e);
      kept.push_back(e);
    }
    // members made redundant by later additions
    for (std::size_t i = 0; i < kept.size();) {
      IdealSpan rest(vars, cap);
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) rest.add(kept[j]);
      if (rest.contains(kept[i])) kept.erase(kept.begin() + i);
      else ++i;
    }
    out.equalities = std::move(kept);
  }

  std::vector<OctConstraint> octs = set.octagons;
  std::sort(octs.begin(), octs.end());
  octs.erase(std::unique(octs.begin(), octs.end()), octs.end());
  std::vector<bool> alive(octs.size(), true);
  for (std::size_t i = 0; i < octs.size(); ++i) {
    std::vector<OctConstraint> others;
    for (std::size_t j = 0; j < octs.size(); ++j)
      if (j != i && alive[j]) others.push_back(octs[j]);
    if (implied_by(others, out.equalities, octs[i])) alive[i] = false;
  }
  for (std::size_t i = 0; i < octs.size(); ++i)
    if (alive[i]) out.octagons.push_back(octs[i]);
  return out;
}

}  // namespace polyinv
