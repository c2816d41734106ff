#include "polyinv/exec/trace_csv.hpp"

#include <istream>
#include <map>
#include <ostream>

namespace polyinv {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t' && c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void write_trace_csv(std::ostream& os, const std::vector<TraceSet>& sets) {
  for (const auto& s : sets) {
    os << "loc";
    for (const auto& v : s.vars()) os << ',' << v;
    os << '\n';
    for (const auto& row : s.rows()) {
      os << s.location().label;
      for (const auto& x : row) os << ',' << x.get_str();
      os << '\n';
    }
  }
}

std::vector<TraceSet> read_trace_csv(std::istream& is) {
  std::vector<TraceSet> out;
  std::map<std::string, std::size_t> by_loc;
  std::vector<std::string> header;
  std::string line;
  int lineno = 0;
  const Input no_origin;
  while (std::getline(is, line)) {
    ++lineno;
    auto fields = split(line);
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields[0] == "loc") {
      header.assign(fields.begin() + 1, fields.end());
      for (const auto& h : header)
        if (h.empty()) throw CsvError(lineno, "empty column name");
      continue;
    }
    if (header.empty() && fields.size() > 0 && out.empty())
      throw CsvError(lineno, "missing 'loc,...' header");
    if (fields.size() != header.size() + 1)
      throw CsvError(lineno, "expected " + std::to_string(header.size() + 1) + " fields, got " +
                                 std::to_string(fields.size()));
    if (fields[0].empty()) throw CsvError(lineno, "empty location");
    std::vector<Int> values;
    values.reserve(header.size());
    for (std::size_t i = 1; i < fields.size(); ++i) {
      try {
        values.push_back(parse_int(fields[i]));
      } catch (const std::invalid_argument&) {
        throw CsvError(lineno, "not an integer: '" + fields[i] + "'");
      }
    }
    auto it = by_loc.find(fields[0]);
    if (it == by_loc.end()) {
      it = by_loc.emplace(fields[0], out.size()).first;
      out.emplace_back(LocationId(fields[0]), header);
    } else if (out[it->second].vars() != header) {
      throw CsvError(lineno, "location '" + fields[0] + "' seen with different columns");
    }
    out[it->second].add(std::move(values), no_origin);
  }
  return out;
}

}  // namespace polyinv
