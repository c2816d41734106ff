#pragma once

#include "polyinv/cli/pipeline.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polyinv {

struct Expectation {
  LocationId loc;
  std::variant<Equality, OctConstraint> pred;
  std::string text;
  int line = 0;
};

/// Expected-invariant file next to a corpus program (`name.expected`).
///
///   # comment
///   option degree 2
///   L1: x == q*y + r
///   L1: y <= b
///   bounds: 0; N + m + 1
struct Sidecar {
  std::vector<std::pair<std::string, std::string>> options;
  std::vector<Expectation> expectations;
  /// Expected complexity bounds over the inputs, if any.
  std::vector<Polynomial> bounds;
  bool has_bounds = false;
};

class SidecarError : public std::runtime_error {
 public:
  SidecarError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

Sidecar parse_sidecar(const std::string& text);
Sidecar load_sidecar(const std::string& path);

struct ExpectationOutcome {
  std::string text;
  bool ok = false;
};

/// Checks each expectation is implied by the reported invariants at its location.
std::vector<ExpectationOutcome> check_expectations(const Sidecar& s, const Report& r);

/// True if the extracted bounds equal the expected set exactly.
bool check_bounds(const Sidecar& s, const ComplexityReport& r);

}  // namespace polyinv
