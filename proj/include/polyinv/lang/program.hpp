#pragma once

#include "polyinv/lang/ast.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyinv {

/// Syntax or static-semantics error in a program text, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  enum class Code { Syntax, DuplicateLocation, UndeclaredVariable, Unassigned, Other };

  ParseError(Code code, SourcePos pos, const std::string& msg);

  Code code() const { return code_; }
  SourcePos pos() const { return pos_; }

 private:
  Code code_;
  SourcePos pos_;
};

/// Variables visible at a location, alphabetically ordered, with their runtime slots.
struct LocationInfo {
  LocationId id;
  std::vector<std::string> vars;
  std::vector<int> slots;
  SourcePos pos;
  bool loop_head = false;
};

/// A resolved, immutable program. Construct through parse_program or build_program.
class Program {
 public:
  const std::string& name() const { return name_; }
  const std::vector<InputDecl>& inputs() const { return inputs_; }
  const std::vector<int>& input_slots() const { return input_slots_; }
  const StmtPtr& body() const { return body_; }

  /// Locations in source order.
  const std::vector<LocationInfo>& locations() const { return locations_; }
  bool has_location(const LocationId& id) const;
  /// Throws std::out_of_range for an unknown location.
  const LocationInfo& location(const LocationId& id) const;

  int slot_count() const { return static_cast<int>(slot_names_.size()); }
  const std::vector<std::string>& slot_names() const { return slot_names_; }
  /// Slots definitely assigned at program end, ascending.
  const std::vector<int>& top_level_slots() const { return top_level_slots_; }

  bool has_loop() const { return has_loop_; }
  /// Every identifier that occurs anywhere in the program (inputs included).
  const std::vector<std::string>& all_names() const { return all_names_; }

 private:
  friend Program build_program(std::string name, std::vector<InputDecl> inputs, StmtPtr body);

  std::string name_;
  std::vector<InputDecl> inputs_;
  std::vector<int> input_slots_;
  StmtPtr body_;
  std::vector<LocationInfo> locations_;
  std::map<LocationId, std::size_t> location_index_;
  std::vector<std::string> slot_names_;
  std::vector<int> top_level_slots_;
  std::vector<std::string> all_names_;
  bool has_loop_ = false;
};

/// Resolves slots, checks location uniqueness and definite assignment. A location
/// sees exactly the variables assigned on every path reaching it.
Program build_program(std::string name, std::vector<InputDecl> inputs, StmtPtr body);

/// Parses `.mpl` source. `default_name` is used when no `program NAME;` header is given.
Program parse_program(std::string_view text, std::string default_name = "main");

/// Reads and parses a `.mpl` file; the default name is the file stem.
Program load_program(const std::string& path);

/// Alphabetically ordered variables in scope at `loc`. Throws std::out_of_range.
std::vector<std::string> extract_vars(const Program& p, const LocationId& loc);

/// Source text that parses back to an identical program.
std::string print_program(const Program& p);
std::string print_expr(const Expr& e);

/// Adds the ghost counter `t`: `t = 0` first, `t = t + 1` at the top of every loop body,
/// and an exit mark when the program does not already end in one.
/// Throws std::invalid_argument if `t` is already used, or if the program has no loop
/// and `allow_loop_free` is false.
Program instrument_counter(const Program& p, bool allow_loop_free = false,
                           const std::string& counter = "t");

/// The mark at program exit (last top-level statement), if any.
std::optional<LocationId> exit_location(const Program& p);

}  // namespace polyinv
