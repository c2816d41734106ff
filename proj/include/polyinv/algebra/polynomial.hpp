#pragma once

#include "polyinv/algebra/monomial.hpp"
#include "polyinv/integer.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyinv {

/// Multivariate polynomial with rational coefficients over a named variable list.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Polynomial constant(std::vector<std::string> vars, const Rational& c);
  static Polynomial variable(std::vector<std::string> vars, const std::string& name);
  static Polynomial monomial(std::vector<std::string> vars, Monomial m, const Rational& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Grlex-greatest monomial; requires !is_zero().
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }
  int degree() const;
  int degree_in(std::size_t var) const;
  int var_index(const std::string& name) const;
  /// True if the variable occurs with a nonzero exponent.
  bool uses(std::size_t var) const { return degree_in(var) > 0; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  Polynomial pow(unsigned k) const;

  /// Re-expresses over `new_vars`, which must contain every used variable.
  Polynomial embed(const std::vector<std::string>& new_vars) const;

  /// Value at a point aligned with vars().
  Rational eval(const std::vector<Int>& point) const;
  /// Value at a point aligned with vars(); requires integer coefficients.
  Int eval_int(const std::vector<Int>& point) const;
  bool integral() const;

  /// Scales to coprime integer coefficients with a positive leading coefficient.
  Polynomial primitive() const;

  /// Coefficients of x_var^k as polynomials in the same variable list.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Human-readable form, terms in descending grlex order, e.g. `q*y + r - x`.
  std::string to_string() const;

 private:
  Polynomial binary(const Polynomial& o, int sign) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Union of variables of a and b, ASCII sorted.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

/// Exact quotient a / b if b divides a in Q[vars]; requires identical vars.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Parses `a*b^2 - 3*c + 1`-style text (integers, identifiers, + - * ^, parentheses).
/// Variables of the result are `vars` plus any new names, ASCII sorted.
/// Throws std::invalid_argument on syntax errors.
Polynomial parse_polynomial(std::string_view text, std::vector<std::string> vars = {});

}  // namespace polyinv
