#pragma once

#include "polyinv/invariant/octagon.hpp"
#include "polyinv/verify/verifier.hpp"

#include <optional>
#include <vector>

namespace polyinv {

struct Probe {
  Int value;
  bool refuted = false;
  /// Largest term value over the cex traces, when refuted.
  std::optional<Int> observed;
};

struct BoundResult {
  enum class Status { Bounded, UnboundedInRange };
  Status status = Status::Bounded;
  Int k;
  /// Interval when the search ended.
  Int lo, hi;
  std::vector<Probe> probes;

  bool bounded() const { return status == Status::Bounded; }
};

/// Least k in [minV, maxV] with no cex for `term <= k` at `loc`, by interval halving.
/// Assumes `term <= maxV` already holds. Reports UnboundedInRange if a cex shows a value
/// above maxV. Throws std::invalid_argument if minV > maxV.
BoundResult find_upper_bound(const OctTerm& term, const Int& minV, const Int& maxV,
                             CexOracle& oracle, const LocationId& loc,
                             const std::vector<std::string>& vars);

/// Greatest k with no cex for `term >= k`: the negated upper-bound search.
BoundResult find_lower_bound(const OctTerm& term, const Int& minV, const Int& maxV,
                             CexOracle& oracle, const LocationId& loc,
                             const std::vector<std::string>& vars);

struct OctInferConfig {
  Int min_value = -10;
  Int max_value = 10;
};

struct OctTermOutcome {
  OctTerm term;
  BoundResult result;
  /// Refuted at max_value by the gathered traces or the batch pre-check.
  bool prefiltered = false;
};

struct OctInferResult {
  std::vector<OctConstraint> constraints;
  std::vector<OctTermOutcome> terms;
  std::size_t probes = 0;
  std::size_t prefilter_refuted = 0;
};

/// Bounds for every octagonal term over the location's variables. `seed` traces
/// (aligned with the location's variables) tighten the search start points.
OctInferResult infer_octagons(const Program& p, const LocationId& loc, CexOracle& oracle,
                              const OctInferConfig& cfg = {}, const TraceSet* seed = nullptr);

}  // namespace polyinv
