#pragma once

#include "polyinv/algebra/linalg.hpp"
#include "polyinv/algebra/monomial.hpp"

#include <vector>

namespace polyinv {

/// Row of term values at a point aligned with the terms' variable list.
IntVec instantiate(const std::vector<Monomial>& terms, const std::vector<Int>& point);

/// Linear system over template coefficients: one row per instantiating trace.
/// Rows are kept exactly; independence is screened modulo a large prime and
/// every solve is confirmed by an exact residual check against all rows.
class EqSystem {
 public:
  explicit EqSystem(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<IntVec>& rows() const { return rows_; }
  /// Rank of the stored rows (exact once solve() has been called since the last add).
  std::size_t rank() const { return modp_.rank() > exact_.rank() ? modp_.rank() : exact_.rank(); }

  /// Adds the row for a trace; returns true if it increased the rank.
  bool add_point(const std::vector<Int>& point);
  bool add_row(IntVec row);

  /// Exact nullspace basis of all stored rows (reduced: one vector per free column).
  std::vector<RatVec> solve();

 private:
  std::vector<Monomial> terms_;
  std::vector<IntVec> rows_;
  ModpEchelon modp_;
  RrefBuilder exact_;
  std::vector<bool> in_exact_;
};

}  // namespace polyinv
