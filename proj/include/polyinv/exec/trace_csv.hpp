#pragma once

#include "polyinv/exec/trace.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyinv {

class CsvError : public std::runtime_error {
 public:
  CsvError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Writes one `loc,v1,...` header per trace set followed by its rows.
void write_trace_csv(std::ostream& os, const std::vector<TraceSet>& sets);

/// Parses the format written by write_trace_csv. A header line starts a new
/// section; rows must name a location and carry one integer per header column.
/// Rows for the same location across sections must share the same variables.
std::vector<TraceSet> read_trace_csv(std::istream& is);

}  // namespace polyinv
