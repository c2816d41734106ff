#include "polyinv/algebra/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace polyinv {

Monomial Monomial::var(std::size_t nvars, std::size_t i, int power) {
  Monomial m(nvars);
  m.exp[i] = power;
  return m;
}

int Monomial::degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = exp[i] + o.exp[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = exp[i] - o.exp[i];
  return r;
}

std::string Monomial::to_string(const std::vector<std::string>& vars) const {
  std::string s;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (exp[i] > 1) s += '^' + std::to_string(exp[i]);
  }
  return s.empty() ? "1" : s;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp < b.exp;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ULL;
  for (int e : m.exp) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ULL;
  return h;
}

namespace {

void gen_degree(std::size_t nvars, int d, std::size_t i, Monomial& cur,
                std::vector<Monomial>& out) {
  if (i + 1 == nvars) {
    cur.exp[i] = d;
    out.push_back(cur);
    cur.exp[i] = 0;
    return;
  }
  // ascending lex with first variable most significant: small exponents first
  for (int e = 0; e <= d; ++e) {
    cur.exp[i] = e;
    gen_degree(nvars, d - e, i + 1, cur, out);
  }
  cur.exp[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  for (int k = 0; k <= d; ++k) gen_degree(nvars, k, 0, cur, out);
  return out;
}

std::uint64_t term_count(std::size_t nvars, int d) {
  // C(n+d, d) computed incrementally: C(n+k, k) = C(n+k-1, k-1) * (n+k) / k
  unsigned __int128 c = 1;
  for (int k = 1; k <= d; ++k) {
    c = c * (nvars + k) / k;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace polyinv
