#pragma once

#include "polyinv/invariant/octagon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyinv {

/// Integer octagon as a difference-bound matrix over 2n nodes
/// (node 2i is +v_i, node 2i+1 is -v_i).
class OctagonDbm {
 public:
  explicit OctagonDbm(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }

  /// Adds a constraint over the known variables; throws if a variable is unknown.
  void add(const OctConstraint& c);

  /// Shortest-path closure, integer tightening and strengthening.
  /// Returns false if the constraints are unsatisfiable.
  bool close();
  bool unsat() const { return unsat_; }

  /// Best bound for `term` after close(); nullopt if unbounded.
  std::optional<Int> bound(const OctTerm& term) const;
  /// True if the closed octagon implies `c` (always true when unsatisfiable).
  bool entails(const OctConstraint& c) const;

 private:
  struct Cell {
    bool finite = false;
    Int v;
  };
  std::size_t node(const std::string& var, int sign) const;
  void tighten_edge(std::size_t i, std::size_t j, const Int& v);
  Cell& at(std::size_t i, std::size_t j) { return m_[i * n2_ + j]; }
  const Cell& at(std::size_t i, std::size_t j) const { return m_[i * n2_ + j]; }

  std::vector<std::string> vars_;
  std::size_t n2_;
  std::vector<Cell> m_;
  bool unsat_ = false;
};

}  // namespace polyinv
