#pragma once

#include "polyinv/exec/trace.hpp"
#include "polyinv/lang/program.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyinv {

enum class RunStatus { Ok, Diverged, AssumeViolated, RuntimeError };

const char* to_string(RunStatus s);

struct RunOptions {
  std::uint64_t max_steps = 1'000'000;
  /// Traces kept per location per run; excess visits are uniformly sampled.
  std::size_t trace_cap = 10'000;
  bool wrap64 = false;
  std::uint64_t seed = 0;
  /// Record traces only at this location.
  std::optional<LocationId> only;
};

struct RunResult {
  RunStatus status = RunStatus::Ok;
  std::string error;
  SourcePos error_pos;
  /// Visited traces, in visit order (subsampled beyond trace_cap).
  std::vector<Trace> traces;
  /// Total visits per location index, including those dropped by the cap.
  std::vector<std::uint64_t> visits;
  bool truncated = false;
  std::uint64_t loop_entries = 0;
  std::uint64_t steps = 0;
  /// Slot-indexed state at termination (meaningful when status is Ok).
  std::vector<Int> final_state;
};

/// Called with the location index and the full slot state at every visit.
using VisitFn = std::function<void(int loc_index, const std::vector<Int>& state)>;

/// Throws std::invalid_argument if `in` does not match the declared inputs.
RunResult run(const Program& p, const Input& in, const RunOptions& opts = {});

/// Runs without recording traces; `visit` sees every location visit.
RunResult run_visit(const Program& p, const Input& in, const RunOptions& opts,
                    const VisitFn& visit);

/// Values at a location extracted from a full slot state.
std::vector<Int> values_at(const LocationInfo& loc, const std::vector<Int>& state);

struct ExecStats {
  std::size_t ok = 0;
  std::size_t diverged = 0;
  std::size_t assume_violated = 0;
  std::size_t runtime_error = 0;
  std::vector<std::string> log;
};

/// Union of per-run traces at `loc`. Failed runs contribute nothing and are logged.
/// `jobs > 1` runs inputs on worker threads; the result equals the sequential one.
TraceSet exec_many(const Program& p, const LocationId& loc, const std::vector<Input>& ins,
                   const RunOptions& opts = {}, unsigned jobs = 1, ExecStats* stats = nullptr);

/// Per-run seed for trace-cap sampling.
std::uint64_t run_seed(std::uint64_t seed, const Input& in);

std::string format_input(const Program& p, const Input& in);

}  // namespace polyinv
