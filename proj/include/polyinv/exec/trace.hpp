#pragma once

#include "polyinv/lang/ast.hpp"

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

namespace polyinv {

/// Input valuation, aligned with Program::inputs().
using Input = std::vector<Int>;

std::size_t hash_values(const std::vector<Int>& v);

struct ValuesHash {
  std::size_t operator()(const std::vector<Int>& v) const { return hash_values(v); }
};

using InputSet = std::unordered_set<Input, ValuesHash>;

/// One visit to a location: values aligned with extract_vars at that location.
struct Trace {
  LocationId loc;
  std::vector<Int> values;
};

/// Duplicate-free traces at one location, in insertion order, with the input
/// that first produced each row.
class TraceSet {
 public:
  TraceSet() = default;
  TraceSet(LocationId loc, std::vector<std::string> vars)
      : loc_(std::move(loc)), vars_(std::move(vars)) {}

  const LocationId& location() const { return loc_; }
  const std::vector<std::string>& vars() const { return vars_; }

  /// Returns true if the row was new.
  bool add(std::vector<Int> values, const Input& origin);
  bool contains(const std::vector<Int>& values) const { return index_.count(values) != 0; }
  /// Adds every row of `other` (same location and variables) in its order.
  void merge(const TraceSet& other);

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<std::vector<Int>>& rows() const { return rows_; }
  const std::vector<Int>& row(std::size_t i) const { return rows_[i]; }
  const Input& origin(std::size_t i) const { return origins_[i]; }

  /// Index of `name` in vars(), or -1.
  int var_index(const std::string& name) const;

 private:
  LocationId loc_;
  std::vector<std::string> vars_;
  std::vector<std::vector<Int>> rows_;
  std::vector<Input> origins_;
  std::unordered_set<std::vector<Int>, ValuesHash> index_;
};

}  // namespace polyinv
