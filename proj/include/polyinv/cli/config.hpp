#pragma once

#include "polyinv/eqinfer/eqinfer.hpp"
#include "polyinv/ineqinfer/ineqinfer.hpp"
#include "polyinv/verify/verifier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyinv {

enum class OutputFormat { Text, Json };

struct Config {
  std::uint64_t alpha = 200;
  std::optional<int> degree;
  std::int64_t oct_range = 10;
  VerifyMode mode = VerifyMode::Auto;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  std::vector<std::string> locations;
  OutputFormat format = OutputFormat::Text;
  unsigned jobs = 1;
  bool wrap64 = false;
  bool timings = false;
  std::size_t max_cex = 16;
  int max_iterations = 50;

  /// Throws std::invalid_argument naming the first non-positive field.
  void validate() const;

  VerifyBudget verify_budget() const;
  RunOptions run_options() const;
  EqInferConfig eq_config() const;
  OctInferConfig oct_config() const;

  /// Applies `key value` (as in sidecar `option` lines); throws std::invalid_argument.
  void set_option(const std::string& key, const std::string& value);
};

VerifyMode parse_mode(const std::string& s);

}  // namespace polyinv
