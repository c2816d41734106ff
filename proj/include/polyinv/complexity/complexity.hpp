#pragma once

#include "polyinv/eqinfer/eqinfer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyinv {

/// Relation between the ghost counter and the inputs at program exit.
struct CounterRelation {
  Equality relation;
  std::string counter = "t";
  int t_degree = 0;
};

struct ComplexityConfig {
  EqInferConfig eq;
  std::string counter = "t";
  /// Trace subsets tried per root search.
  std::size_t max_subsets = 64;
  std::uint64_t seed = 0;
  /// Highest degree of candidate roots.
  int max_root_degree = 2;
};

struct CounterInference {
  EqStatus status = EqStatus::Ok;
  std::optional<CounterRelation> relation;
  /// All accepted equalities over the inputs and the counter.
  std::vector<Equality> equalities;
  /// Exit traces over the inputs and the counter.
  TraceSet traces;
  LocationId exit;
  EqInferResult inference;
};

/// Picks the relation of highest counter degree among `eqs` (ties: fewer terms, then
/// term order). Returns nullopt if no equality mentions the counter.
std::optional<CounterRelation> select_counter_relation(const std::vector<Equality>& eqs,
                                                       const std::string& counter);

/// Instruments `p` with the counter and infers equalities at its exit mark over the
/// inputs and the counter. Throws std::invalid_argument per instrument_counter.
CounterInference infer_counter_relation(const Program& p, const VerifyBudget& budget,
                                        const ComplexityConfig& cfg = {},
                                        const RunOptions& run = {}, unsigned jobs = 1);

struct BoundExtraction {
  /// Roots of the relation seen as a polynomial in the counter, over the inputs.
  std::vector<Polynomial> bounds;
  /// Power of the counter factored out first.
  int t_power = 0;
  /// Unfactored remainder: relation = t^t_power * prod(t - bound_i) * residual.
  Polynomial residual;
  /// The product identity was checked symbolically.
  bool identity_holds = false;
};

/// Exact roots of `rel` in the counter. Candidate roots come from trace subsets
/// (`traces` over the relation's variables) and are kept only if they divide exactly.
BoundExtraction extract_bounds(const CounterRelation& rel, const TraceSet& traces,
                               const ComplexityConfig& cfg = {});

}  // namespace polyinv
