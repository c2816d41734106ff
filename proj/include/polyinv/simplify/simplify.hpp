#pragma once

#include "polyinv/invariant/equality.hpp"
#include "polyinv/invariant/octagon.hpp"

#include <map>
#include <unordered_map>
#include <vector>

namespace polyinv {

struct InvariantSet {
  std::vector<Equality> equalities;
  std::vector<OctConstraint> octagons;

  bool empty() const { return equalities.empty() && octagons.empty(); }
  bool operator==(const InvariantSet& o) const {
    return equalities == o.equalities && octagons == o.octagons;
  }
};

/// Linear span of { m*e : e added, m a monomial, deg(m*e) <= cap } over a fixed
/// variable list, kept in echelon form modulo 2^61 - 1.
class IdealSpan {
 public:
  IdealSpan(std::vector<std::string> vars, int cap);

  void add(const Equality& e);
  bool contains(const Equality& e) const;
  /// Membership of an arbitrary polynomial over the same variables.
  bool contains(const Polynomial& p) const;
  std::size_t rank() const { return rank_; }

 private:
  using Row = std::vector<std::pair<int, std::uint64_t>>;  // ascending term index
  /// Reduces in place; returns the first non-reducible index, or -1 if reduced to zero.
  long reduce(std::vector<std::uint64_t>& dense) const;
  bool load(const Polynomial& p, const Monomial* shift, std::vector<std::uint64_t>& dense) const;

  std::vector<std::string> vars_;
  int cap_;
  std::vector<Monomial> terms_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
  std::vector<Row> pivots_;  // by leading term index; leading coeff 1, empty if none
  std::size_t rank_ = 0;
};

/// True if `cand` lies in the span of monomial multiples of `others` up to degree 2d.
bool is_implied_eq(const std::vector<Equality>& others, const Equality& cand, int d);

/// True if `cand` follows from the octagons of `others` together with the
/// octagonal linear equalities among them, under integer octagon closure.
bool is_implied_oct(const InvariantSet& others, const OctConstraint& cand);

/// Drops implied members in a fixed order: equalities by ascending leading term,
/// octagons by term then bound. Idempotent.
InvariantSet remove_redundant(const InvariantSet& set);

}  // namespace polyinv
