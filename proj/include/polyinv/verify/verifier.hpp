#pragma once

#include "polyinv/exec/interpreter.hpp"
#include "polyinv/invariant/equality.hpp"
#include "polyinv/invariant/octagon.hpp"
#include "polyinv/verify/box.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace polyinv {

struct FalsePredicate {
  bool operator==(const FalsePredicate&) const { return true; }
};

using Predicate = std::variant<Equality, OctConstraint, FalsePredicate>;

std::string to_string(const Predicate& p);

enum class CandStat { Undecided, Disproved, Accepted };

struct Candidate {
  Predicate pred;
  CandStat stat = CandStat::Undecided;
  /// Accepted because a complete sweep of the input box found no violation.
  bool accepted_on_box = false;

  explicit Candidate(Predicate p) : pred(std::move(p)) {}
};

/// True if `pred`, bound to `vars`, holds at `point`.
bool predicate_holds(const Predicate& pred, const std::vector<std::string>& vars,
                     const std::vector<Int>& point);

enum class VerifyMode { Auto, Exhaustive, Random };

const char* to_string(VerifyMode m);

struct VerifyBudget {
  VerifyMode mode = VerifyMode::Auto;
  /// Cap on inputs tried per call.
  std::uint64_t max_inputs = 1'000'000;
  /// Inputs tried per call in random mode (further capped by max_inputs).
  std::uint64_t samples = 100'000;
  /// Auto picks exhaustive when the box has at most this many points.
  std::uint64_t exhaustive_limit = 1'000'000;
  /// Wall-clock cap per call in milliseconds; 0 disables it.
  std::uint64_t wall_ms = 0;
  std::uint64_t seed = 0;
  /// Inputs returned per call beyond those that newly disprove a candidate.
  std::size_t max_cex = 16;
  /// Sampling window for unbounded inputs in random mode.
  std::int64_t random_window = 100;
};

struct VerifyResult {
  /// Fresh inputs whose runs reach the location and violate some candidate there.
  std::vector<Input> cex_inputs;
  std::vector<CandStat> stats;
  std::uint64_t inputs_tried = 0;
  /// The whole input box was swept.
  bool box_complete = false;
  /// The location was reached by some input during this call.
  bool reached = false;
};

struct VerifierStats {
  std::uint64_t calls = 0;
  std::uint64_t runs = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cex_returned = 0;
};

/// Counterexample source used by the inference loops.
class CexOracle {
 public:
  virtual ~CexOracle() = default;

  /// Searches for inputs violating candidates at `loc`. Updates each candidate's
  /// stat and returns fresh cex inputs not in `known`.
  virtual VerifyResult find_cex(const LocationId& loc, std::vector<Candidate>& cands,
                                const InputSet& known) = 0;

  /// All traces at `loc` produced by the given inputs.
  virtual TraceSet exec(const LocationId& loc, const std::vector<Input>& ins) = 0;

  /// Whether a sweep that returns no cex proves the candidates on the whole input box.
  virtual bool exhaustive() const = 0;
};

/// Concrete-execution verifier: exhaustive box sweep or seeded random sampling.
class Verifier : public CexOracle {
 public:
  /// Throws std::invalid_argument for a zero budget, or exhaustive mode over
  /// an unbounded input.
  Verifier(const Program& p, VerifyBudget budget, RunOptions run = {}, unsigned jobs = 1);

  VerifyResult find_cex(const LocationId& loc, std::vector<Candidate>& cands,
                        const InputSet& known) override;
  TraceSet exec(const LocationId& loc, const std::vector<Input>& ins) override;
  bool exhaustive() const override { return mode_ == VerifyMode::Exhaustive; }

  /// Candidate False at `loc`: returns a reaching input if one is found.
  std::optional<Input> check_reachable(const LocationId& loc, const InputSet& known = {});

  VerifyMode mode() const { return mode_; }
  /// Number of inputs one call will try.
  std::uint64_t sweep_size() const { return sweep_; }
  const VerifierStats& stats() const { return stats_; }
  const Program& program() const { return p_; }

  /// Total traces recorded at `loc` across every run so far (for residual checks).
  const TraceSet& observed(const LocationId& loc);

 private:
  struct Outcome {
    RunStatus status = RunStatus::Ok;
    bool truncated = false;
    std::vector<Trace> traces;
  };

  Input input_at(std::uint64_t i);
  std::shared_ptr<const Outcome> outcome(const Input& in);
  void record(const Input& in, const Outcome& o);

  const Program& p_;
  VerifyBudget budget_;
  RunOptions run_;
  unsigned jobs_;
  VerifyMode mode_;
  std::uint64_t sweep_ = 0;
  std::optional<BoxEnumerator> box_;
  std::vector<Input> random_inputs_;

  std::mutex mu_;
  bool cache_enabled_ = true;
  std::size_t cached_traces_ = 0;
  std::unordered_map<Input, std::shared_ptr<const Outcome>, ValuesHash> cache_;
  std::map<LocationId, TraceSet> observed_;
  InputSet recorded_;
  VerifierStats stats_;
};

}  // namespace polyinv
