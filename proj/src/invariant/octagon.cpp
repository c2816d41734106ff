#include "polyinv/invariant/octagon.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyinv {

OctTerm OctTerm::single(int a, std::string v) {
  if (a != 1 && a != -1) throw std::invalid_argument("octagon coefficient must be +-1");
  return OctTerm{a, std::move(v), 0, {}};
}

OctTerm OctTerm::pair(int a1, std::string v1, int a2, std::string v2) {
  if ((a1 != 1 && a1 != -1) || (a2 != 1 && a2 != -1))
    throw std::invalid_argument("octagon coefficient must be +-1");
  if (v1 == v2) throw std::invalid_argument("octagon pair over a single variable");
  if (v2 < v1) {
    std::swap(v1, v2);
    std::swap(a1, a2);
  }
  return OctTerm{a1, std::move(v1), a2, std::move(v2)};
}

OctTerm OctTerm::negated() const {
  OctTerm t = *this;
  t.a1 = -a1;
  t.a2 = -a2;
  return t;
}

namespace {

int find_var(const std::vector<std::string>& vars, const std::string& v) {
  auto it = std::find(vars.begin(), vars.end(), v);
  if (it == vars.end()) throw std::invalid_argument("variable '" + v + "' not in scope");
  return static_cast<int>(it - vars.begin());
}

}  // namespace

Int OctTerm::eval(const std::vector<std::string>& vars, const std::vector<Int>& point) const {
  return BoundOctTerm::bind(*this, vars).eval(point);
}

Polynomial OctTerm::polynomial(const std::vector<std::string>& vars) const {
  Polynomial p = Polynomial::variable(vars, v1) * Rational(a1);
  if (a2 != 0) p = p + Polynomial::variable(vars, v2) * Rational(a2);
  return p;
}

std::string OctTerm::to_string() const {
  std::string s = (a1 < 0 ? "-" : "") + v1;
  if (a2 != 0) s += (a2 < 0 ? " - " : " + ") + v2;
  return s;
}

bool OctTerm::operator<(const OctTerm& o) const {
  if (is_pair() != o.is_pair()) return !is_pair();
  if (v1 != o.v1) return v1 < o.v1;
  if (v2 != o.v2) return v2 < o.v2;
  if (a1 != o.a1) return a1 > o.a1;
  return a2 > o.a2;
}

std::string OctConstraint::to_string() const { return term.to_string() + " <= " + k.get_str(); }

std::optional<OctConstraint> OctConstraint::from_polynomial_le0(const Polynomial& p) {
  if (p.degree() > 1) return std::nullopt;
  Rational c0 = 0;
  std::vector<std::pair<std::string, Rational>> lin;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_constant()) {
      c0 = c;
      continue;
    }
    for (std::size_t i = 0; i < m.exp.size(); ++i)
      if (m.exp[i]) lin.emplace_back(p.vars()[i], c);
  }
  if (lin.empty() || lin.size() > 2) return std::nullopt;
  Rational mag = abs(lin[0].second);
  if (lin.size() == 2 && abs(lin[1].second) != mag) return std::nullopt;
  // mag * term + c0 <= 0  <=>  term <= floor(-c0 / mag)
  Rational bound = -c0 / mag;
  Int k;
  mpz_fdiv_q(k.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  OctConstraint oc;
  int s1 = lin[0].second > 0 ? 1 : -1;
  if (lin.size() == 1) {
    oc.term = OctTerm::single(s1, lin[0].first);
  } else {
    int s2 = lin[1].second > 0 ? 1 : -1;
    oc.term = OctTerm::pair(s1, lin[0].first, s2, lin[1].first);
  }
  oc.k = k;
  return oc;
}

std::optional<OctConstraint> OctConstraint::parse(const std::string& text) {
  struct Op {
    const char* sym;
    bool flip;
    bool strict;
  };
  static const Op ops[] = {{"<=", false, false}, {">=", true, false},
                           {"<", false, true},   {">", true, true}};
  for (const auto& op : ops) {
    auto pos = text.find(op.sym);
    if (pos == std::string::npos) continue;
    std::size_t len = std::string(op.sym).size();
    Polynomial l = parse_polynomial(text.substr(0, pos));
    Polynomial r = parse_polynomial(text.substr(pos + len));
    Polynomial d = op.flip ? r - l : l - r;
    // strict: d < 0 <=> d + 1 <= 0 over the integers
    if (op.strict) d = d + Polynomial::constant(d.vars(), 1);
    return from_polynomial_le0(d);
  }
  return std::nullopt;
}

std::vector<OctTerm> enumerate_oct_terms(const std::vector<std::string>& vars) {
  std::vector<OctTerm> out;
  for (const auto& v : vars) {
    out.push_back(OctTerm::single(1, v));
    out.push_back(OctTerm::single(-1, v));
  }
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      for (int a1 : {1, -1})
        for (int a2 : {1, -1}) out.push_back(OctTerm::pair(a1, vars[i], a2, vars[j]));
  return out;
}

BoundOctTerm BoundOctTerm::bind(const OctTerm& t, const std::vector<std::string>& vars) {
  BoundOctTerm b;
  b.a1 = t.a1;
  b.i1 = find_var(vars, t.v1);
  b.a2 = t.a2;
  if (t.a2 != 0) b.i2 = find_var(vars, t.v2);
  return b;
}

}  // namespace polyinv
