#pragma once

#include "polyinv/integer.hpp"

#include <cstdint>
#include <vector>

namespace polyinv {

using RatVec = std::vector<Rational>;
using IntVec = std::vector<Int>;

/// Incrementally maintained reduced row echelon form over Q.
class RrefBuilder {
 public:
  explicit RrefBuilder(std::size_t ncols) : ncols_(ncols) {}

  /// Inserts a row; returns false if it lies in the current row space.
  bool add(RatVec row);
  bool add(const IntVec& row);
  /// True if `row` lies in the current row space.
  bool in_span(RatVec row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<RatVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Right nullspace basis, one vector per free column in ascending column
  /// order; each vector has 1 at its free column and 0 at the other free columns.
  std::vector<RatVec> nullspace() const;

 private:
  void reduce(RatVec& row) const;

  std::size_t ncols_;
  std::vector<RatVec> rows_;          // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

/// Nullspace basis of the integer matrix `rows` with `ncols` columns.
std::vector<RatVec> nullspace(const std::vector<IntVec>& rows, std::size_t ncols);

/// Arithmetic modulo the prime 2^61 - 1.
namespace modp {
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
std::uint64_t inv(std::uint64_t a);
std::uint64_t from_int(const Int& v);
/// Throws std::domain_error if the denominator vanishes modulo p.
std::uint64_t from_rational(const Rational& v);
}  // namespace modp

/// Row echelon form modulo the prime 2^61 - 1, for fast independence tests.
class ModpEchelon {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  explicit ModpEchelon(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

  /// Inserts a row; returns true if it is independent modulo p (hence over Q).
  bool add(const IntVec& row);
  std::size_t rank() const { return rows_.size(); }

  static std::uint64_t reduce(const Int& v);

 private:
  std::size_t ncols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<long> pivot_row_;
};

/// Dot product of an integer row with a rational vector.
Rational dot(const IntVec& row, const RatVec& v);

/// Scales a rational vector to coprime integers (sign unchanged).
IntVec to_primitive_int(const RatVec& v);

}  // namespace polyinv
