#pragma once

#include "polyinv/exec/interpreter.hpp"
#include "polyinv/verify/box.hpp"

#include <set>
#include <string>
#include <vector>

namespace testing {

using namespace polyinv;

inline std::string corpus(const std::string& name) {
  return std::string(POLYINV_CORPUS_DIR) + "/" + name;
}

/// Every trace at `loc` over the whole input box, by direct re-execution.
inline std::vector<std::vector<Int>> brute_traces(const Program& p, const LocationId& loc,
                                                  const RunOptions& base = {}) {
  RunOptions opts = base;
  opts.trace_cap = static_cast<std::size_t>(-1);
  opts.only = loc;
  std::vector<std::vector<Int>> out;
  std::set<std::vector<Int>> seen;
  BoxEnumerator box(p);
  for (std::uint64_t i = 0; i < box.size(); ++i) {
    RunResult r = run(p, box.at(i), opts);
    if (r.status != RunStatus::Ok) continue;
    for (auto& t : r.traces)
      if (seen.insert(t.values).second) out.push_back(t.values);
  }
  return out;
}

}  // namespace testing
