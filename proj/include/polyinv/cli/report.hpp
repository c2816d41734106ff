#pragma once

#include "polyinv/cli/config.hpp"
#include "polyinv/invariant/equality.hpp"
#include "polyinv/invariant/octagon.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace polyinv {

inline constexpr int kSchemaVersion = 1;

struct LocationReport {
  LocationId loc;
  std::vector<std::string> vars;
  std::string status = "ok";
  int degree = 0;
  std::size_t terms = 0;
  std::size_t traces = 0;
  std::vector<Equality> equalities;
  std::vector<OctConstraint> octagons;
  std::size_t raw_equalities = 0;
  std::size_t raw_octagons = 0;
  std::size_t first_candidates = 0;
  int eq_iterations = 0;
  std::size_t cex_inputs = 0;
  std::size_t oct_probes = 0;
  std::size_t prefilter_refuted = 0;
  bool degree_reduced = false;
  bool accepted_on_box = false;
  bool verified = true;
  std::size_t residual_traces = 0;
  std::size_t residual_violations = 0;
  double ms = 0;
};

struct Report {
  std::string command = "infer";
  std::string program;
  std::string mode;
  std::uint64_t sweep = 0;
  Config config;
  std::vector<LocationReport> locations;
  std::uint64_t verifier_calls = 0;
  std::uint64_t verifier_runs = 0;
  std::uint64_t cex_returned = 0;
  double ms = 0;
};

nlohmann::ordered_json config_json(const Config& c);
nlohmann::ordered_json to_json(const Report& r, bool timings = false);
std::string to_text(const Report& r, bool timings = true);

}  // namespace polyinv
