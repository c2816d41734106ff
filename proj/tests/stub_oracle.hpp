#pragma once

#include "polyinv/verify/verifier.hpp"

#include <map>

namespace testing {

using namespace polyinv;

/// Replays a fixed script: probing `term <= k` yields the scripted cex trace, if any.
class ScriptedOracle : public CexOracle {
 public:
  ScriptedOracle(std::vector<std::string> vars, std::map<long, std::vector<Int>> script)
      : vars_(std::move(vars)), script_(std::move(script)) {}

  VerifyResult find_cex(const LocationId&, std::vector<Candidate>& cands,
                        const InputSet&) override {
    VerifyResult r;
    r.stats.resize(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const auto& oc = std::get<OctConstraint>(cands[i].pred);
      long k = oc.k.get_si();
      probes.push_back(k);
      auto it = script_.find(k);
      if (it == script_.end()) {
        cands[i].stat = CandStat::Undecided;
      } else {
        cands[i].stat = CandStat::Disproved;
        r.cex_inputs.push_back(Input{Int(k)});
      }
      r.stats[i] = cands[i].stat;
    }
    r.reached = true;
    return r;
  }

  TraceSet exec(const LocationId& loc, const std::vector<Input>& ins) override {
    TraceSet ts(loc, vars_);
    for (const auto& in : ins) ts.add(script_.at(in[0].get_si()), in);
    return ts;
  }

  bool exhaustive() const override { return false; }

  std::vector<long> probes;

 private:
  std::vector<std::string> vars_;
  std::map<long, std::vector<Int>> script_;
};

}  // namespace testing
