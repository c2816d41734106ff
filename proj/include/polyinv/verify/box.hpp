#pragma once

#include "polyinv/exec/trace.hpp"
#include "polyinv/lang/program.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace polyinv {

/// Values of one bounded input in smallest-magnitude-first order: 0, 1, -1, 2, -2, ...
/// restricted to [lo, hi].
std::vector<Int> magnitude_order(const Int& lo, const Int& hi);

/// Number of points in the declared input box; nullopt if some input is unbounded.
/// Saturates at UINT64_MAX.
std::optional<std::uint64_t> box_size(const Program& p);

/// Lexicographic enumeration of the finite input box (first input varies slowest).
class BoxEnumerator {
 public:
  /// Throws std::invalid_argument if an input is unbounded or an axis is too large.
  explicit BoxEnumerator(const Program& p);

  std::uint64_t size() const { return size_; }
  /// Point with the given rank, 0 <= index < size().
  Input at(std::uint64_t index) const;

 private:
  std::vector<std::vector<Int>> axes_;
  std::uint64_t size_ = 1;
};

/// Seeded uniform sampler over the declared ranges; unbounded sides use
/// a window of `window` around the finite endpoint or zero.
class RandomInputs {
 public:
  RandomInputs(const Program& p, std::uint64_t seed, std::int64_t window = 100);
  Input next();

 private:
  std::vector<std::pair<Int, Int>> ranges_;
  std::mt19937_64 rng_;
};

}  // namespace polyinv
