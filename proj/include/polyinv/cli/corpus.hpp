#pragma once

#include "polyinv/cli/sidecar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyinv {

struct CorpusEntry {
  std::string name;
  std::string path;
  bool has_sidecar = false;
  bool pass = false;
  std::string error;
  std::vector<ExpectationOutcome> expectations;
  std::optional<Report> report;
  std::optional<ComplexityReport> complexity;
  bool bounds_ok = true;
  std::size_t invariants = 0;
  double ms = 0;
};

/// Runs every `*.mpl` in `dir` (sorted by name) with per-program sidecar options.
/// Entries run concurrently when cfg.jobs > 1; results keep name order.
std::vector<CorpusEntry> run_corpus(const std::string& dir, const Config& cfg,
                                    std::vector<std::string>* warnings = nullptr);

nlohmann::ordered_json to_json(const std::vector<CorpusEntry>& entries, const Config& cfg,
                               bool timings = false);
std::string to_text(const std::vector<CorpusEntry>& entries, bool timings = true);

}  // namespace polyinv
