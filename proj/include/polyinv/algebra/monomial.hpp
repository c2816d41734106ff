#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyinv {

/// Exponent vector over an externally fixed variable list.
struct Monomial {
  std::vector<int> exp;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

  static Monomial var(std::size_t nvars, std::size_t i, int power = 1);

  int degree() const;
  bool is_constant() const { return degree() == 0; }
  std::size_t nvars() const { return exp.size(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// this / o; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool operator!=(const Monomial& o) const { return exp != o.exp; }

  std::string to_string(const std::vector<std::string>& vars) const;
};

/// Graded lexicographic order: total degree, then exponents with the first
/// variable most significant.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// All monomials of total degree <= d over `nvars` variables, ascending grlex.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int d);

/// C(n + d, d), saturating at UINT64_MAX.
std::uint64_t term_count(std::size_t nvars, int d);

}  // namespace polyinv
