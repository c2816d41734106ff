#pragma once

#include "polyinv/algebra/polynomial.hpp"
#include "polyinv/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyinv {

/// a1*v1 + a2*v2 with a1, a2 in {-1, 0, 1}. Canonical: a1 != 0, v1 < v2 when a2 != 0,
/// and v2 empty when a2 == 0.
struct OctTerm {
  int a1 = 1;
  std::string v1;
  int a2 = 0;
  std::string v2;

  static OctTerm single(int a, std::string v);
  /// Orders the pair canonically; throws std::invalid_argument if v1 == v2.
  static OctTerm pair(int a1, std::string v1, int a2, std::string v2);

  bool is_pair() const { return a2 != 0; }
  OctTerm negated() const;
  /// Value at a point aligned with `vars`; throws if a variable is missing.
  Int eval(const std::vector<std::string>& vars, const std::vector<Int>& point) const;
  Polynomial polynomial(const std::vector<std::string>& vars) const;
  std::string to_string() const;

  bool operator==(const OctTerm& o) const {
    return a1 == o.a1 && v1 == o.v1 && a2 == o.a2 && v2 == o.v2;
  }
  /// Single-variable terms first; then by variables; then +v before -v.
  bool operator<(const OctTerm& o) const;
};

/// term <= k
struct OctConstraint {
  OctTerm term;
  Int k;

  bool holds(const std::vector<std::string>& vars, const std::vector<Int>& point) const {
    return term.eval(vars, point) <= k;
  }
  /// e.g. `r - y <= -1`
  std::string to_string() const;
  /// Reads `lhs <= rhs`, `lhs >= rhs`, `lhs < rhs`, `lhs > rhs` over at most two
  /// variables with equal-magnitude coefficients; strict forms are tightened over the
  /// integers. Returns nullopt if the relation is not octagonal.
  static std::optional<OctConstraint> parse(const std::string& text);
  /// Same as parse for an already-built `p <= 0`.
  static std::optional<OctConstraint> from_polynomial_le0(const Polynomial& p);

  bool operator==(const OctConstraint& o) const { return term == o.term && k == o.k; }
  bool operator<(const OctConstraint& o) const {
    if (!(term == o.term)) return term < o.term;
    return k < o.k;
  }
};

/// For each variable: v, -v; then for each unordered pair v1 < v2 (by position):
/// v1+v2, v1-v2, -v1+v2, -v1-v2. Total 2n + 4*C(n,2).
std::vector<OctTerm> enumerate_oct_terms(const std::vector<std::string>& vars);

/// Pre-bound form for fast evaluation against a fixed variable list.
struct BoundOctTerm {
  int a1 = 1;
  int i1 = -1;
  int a2 = 0;
  int i2 = -1;

  static BoundOctTerm bind(const OctTerm& t, const std::vector<std::string>& vars);
  Int eval(const std::vector<Int>& point) const {
    Int v = a1 > 0 ? point[i1] : Int(-point[i1]);
    if (a2 > 0) v += point[i2];
    else if (a2 < 0) v -= point[i2];
    return v;
  }
};

}  // namespace polyinv
