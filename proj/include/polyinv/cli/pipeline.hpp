#pragma once

#include "polyinv/cli/report.hpp"
#include "polyinv/complexity/complexity.hpp"
#include "polyinv/simplify/simplify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyinv {

/// Equality and octagon inference at each selected location, then joint simplification.
/// Throws std::invalid_argument for an unknown location in the filter.
Report run_infer(const Program& p, const Config& cfg);

/// Single-shot inference over recorded traces: nullspace candidates and octagon extrema.
Report run_traces(const std::vector<TraceSet>& sets, const Config& cfg,
                  const std::string& name = "traces");

struct ComplexityReport {
  std::string program;
  Config config;
  EqStatus status = EqStatus::Ok;
  LocationId exit;
  std::vector<std::string> vars;
  std::optional<CounterRelation> relation;
  BoundExtraction bounds;
  std::size_t traces = 0;
  double ms = 0;
};

ComplexityReport run_complexity(const Program& p, const Config& cfg);
nlohmann::ordered_json to_json(const ComplexityReport& r, bool timings = false);
std::string to_text(const ComplexityReport& r, bool timings = true);

/// Number of (trace, invariant) pairs where the invariant fails.
std::size_t residual_violations(const TraceSet& traces, const std::vector<Equality>& eqs,
                                const std::vector<OctConstraint>& octs);

}  // namespace polyinv
