#include "polyinv/algebra/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace polyinv {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::set<std::string> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return {s.begin(), s.end()};
}

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial(p.vars_.size()), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, const std::string& name) {
  Polynomial p(std::move(vars));
  int i = p.var_index(name);
  if (i < 0) throw std::invalid_argument("unknown variable '" + name + "'");
  p.add_term(Monomial::var(p.vars_.size(), i), 1);
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, Monomial m, const Rational& c) {
  Polynomial p(std::move(vars));
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const { return terms_.empty() ? -1 : leading_monomial().degree(); }

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp[var]);
  return d;
}

int Polynomial::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

Polynomial Polynomial::binary(const Polynomial& o, int sign) const {
  if (vars_ != o.vars_) {
    auto v = merge_vars(vars_, o.vars_);
    return embed(v).binary(o.embed(v), sign);
  }
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, sign > 0 ? c : Rational(-c));
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return binary(o, 1); }
Polynomial Polynomial::operator-(const Polynomial& o) const { return binary(o, -1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (vars_ != o.vars_) {
    auto v = merge_vars(vars_, o.vars_);
    return embed(v) * o.embed(v);
  }
  Polynomial r(vars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, v * c);
  return r;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(vars_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::embed(const std::vector<std::string>& new_vars) const {
  if (new_vars == vars_) return *this;
  std::vector<int> map(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
    if (it != new_vars.end()) map[i] = static_cast<int>(it - new_vars.begin());
  }
  Polynomial r(new_vars);
  for (const auto& [m, c] : terms_) {
    Monomial nm(new_vars.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (m.exp[i] == 0) continue;
      if (map[i] < 0)
        throw std::invalid_argument("variable '" + vars_[i] + "' missing from embedding");
      nm.exp[map[i]] = m.exp[i];
    }
    r.add_term(nm, c);
  }
  return r;
}

namespace {

Int monomial_value(const Monomial& m, const std::vector<Int>& point) {
  Int v = 1;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    Int p;
    mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(m.exp[i]));
    v *= p;
  }
  return v;
}

}  // namespace

Rational Polynomial::eval(const std::vector<Int>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point arity mismatch");
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c * Rational(monomial_value(m, point));
  return s;
}

Int Polynomial::eval_int(const std::vector<Int>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point arity mismatch");
  Int s = 0;
  for (const auto& [m, c] : terms_) s += c.get_num() * monomial_value(m, point);
  return s;
}

bool Polynomial::integral() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    den_lcm = lcm(den_lcm, c.get_den());
    num_gcd = gcd(num_gcd, c.get_num());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coeff() < 0) scale = -scale;
  return *this * scale;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  int d = std::max(0, degree_in(var));
  std::vector<Polynomial> out(d + 1, Polynomial(vars_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int k = rest.exp[var];
    rest.exp[var] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    bool neg = c < 0;
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    first = false;
    if (m.is_constant()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += m.to_string(vars_);
    }
  }
  return s;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.vars() != b.vars()) {
    auto v = merge_vars(a.vars(), b.vars());
    return divide_exact(a.embed(v), b.embed(v));
  }
  Polynomial q(a.vars()), r = a;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coeff();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    Polynomial t = Polynomial::monomial(a.vars(), lr / lb, r.leading_coeff() / cb);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::vector<std::string> vars) : s_(s), vars_(std::move(vars)) {}

  Polynomial parse() {
    Polynomial p = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial '" + std::string(s_) + "': " + msg);
  }

  Polynomial sum() {
    Polynomial p = product();
    for (;;) {
      if (eat('+')) p = p + product();
      else if (eat('-')) p = p - product();
      else return p;
    }
  }

  Polynomial product() {
    Polynomial p = power();
    while (eat('*')) p = p * power();
    return p;
  }

  Polynomial power() {
    if (eat('-')) return -power();
    if (eat('+')) return power();
    Polynomial b = atom();
    if (eat('^')) {
      skip();
      std::size_t j = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (j == i_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(j, i_ - j)))));
    }
    return b;
  }

  Polynomial atom() {
    skip();
    if (eat('(')) {
      Polynomial p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Polynomial::constant(vars_, Rational(parse_int(s_.substr(j, i_ - j))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      std::string name(s_.substr(j, i_ - j));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
        vars_ = merge_vars(vars_, {name});
      return Polynomial::variable(vars_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::vector<std::string> vars_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::vector<std::string> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  PolyParser parser(text, vars);
  Polynomial p = parser.parse();
  std::vector<std::string> all = merge_vars(vars, p.vars());
  return p.embed(all);
}

}  // namespace polyinv
