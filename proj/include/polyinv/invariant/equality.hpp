#pragma once

#include "polyinv/algebra/linalg.hpp"
#include "polyinv/algebra/polynomial.hpp"

#include <string>
#include <vector>

namespace polyinv {

/// Polynomial equality `p = 0` in canonical form: coprime integer coefficients
/// and a positive coefficient on the grlex-greatest term.
class Equality {
 public:
  Equality() = default;

  /// Throws std::invalid_argument for the zero polynomial.
  static Equality from_polynomial(const Polynomial& p);
  /// Pairs a coefficient vector with `terms` over `vars`. Throws for the zero vector.
  static Equality from_vector(const std::vector<std::string>& vars,
                              const std::vector<Monomial>& terms, const RatVec& coeffs);
  /// Parses `lhs == rhs` (or a bare polynomial meaning `= 0`).
  static Equality parse(const std::string& text, const std::vector<std::string>& vars = {});

  const Polynomial& poly() const { return poly_; }
  const std::vector<std::string>& vars() const { return poly_.vars(); }
  int degree() const { return poly_.degree(); }
  const Monomial& leading_monomial() const { return poly_.leading_monomial(); }

  /// Point aligned with vars().
  bool holds(const std::vector<Int>& point) const { return sgn(poly_.eval_int(point)) == 0; }

  /// Same relation over a different variable list containing every used variable.
  Equality embed(const std::vector<std::string>& vars) const;

  /// Positive-coefficient terms on the left, the rest on the right: `q*y + r == x`.
  std::string to_string() const;
  /// `q*y + r - x` form.
  std::string to_poly_string() const { return poly_.to_string(); }

  bool operator==(const Equality& o) const { return poly_ == o.poly_; }
  bool operator!=(const Equality& o) const { return !(*this == o); }
  /// Deterministic order: leading monomial (grlex), then full term comparison.
  bool operator<(const Equality& o) const;

 private:
  explicit Equality(Polynomial p) : poly_(std::move(p)) {}
  Polynomial poly_;
};

}  // namespace polyinv
