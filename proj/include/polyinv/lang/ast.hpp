#pragma once

#include "polyinv/integer.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace polyinv {

struct SourcePos {
  int line = 0;
  int column = 0;
};

/// Symbolic label of a program location (`[L1]`, `while [L1] (...)`).
struct LocationId {
  std::string label;

  LocationId() = default;
  explicit LocationId(std::string l) : label(std::move(l)) {}
  auto operator<=>(const LocationId&) const = default;
};

enum class UnaryOp { Neg, Not };
enum class BinaryOp { Add, Sub, Mul, Div, Mod, Lt, Le, Eq, Ne, Ge, Gt, And, Or };

const char* op_symbol(BinaryOp op);
/// Higher binds tighter.
int precedence(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Variable, Unary, Binary };

  Kind kind = Kind::Literal;
  Int value;             // Literal
  std::string name;      // Variable
  int slot = -1;         // Variable, filled by resolution
  UnaryOp uop = UnaryOp::Neg;
  BinaryOp bop = BinaryOp::Add;
  ExprPtr lhs;           // Unary operand / Binary left
  ExprPtr rhs;           // Binary right
  SourcePos pos;

  static ExprPtr literal(Int v, SourcePos pos = {});
  static ExprPtr variable(std::string name, SourcePos pos = {}, int slot = -1);
  static ExprPtr unary(UnaryOp op, ExprPtr operand, SourcePos pos = {});
  static ExprPtr binary(BinaryOp op, ExprPtr l, ExprPtr r, SourcePos pos = {});
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  enum class Kind { Assign, Block, If, While, Assume, Mark };

  Kind kind = Kind::Block;
  std::string var;                 // Assign target
  int slot = -1;                   // Assign target slot
  ExprPtr expr;                    // Assign value, If/While condition, Assume condition
  std::vector<StmtPtr> children;   // Block body; If {then, else?}; While {body}
  std::optional<LocationId> label; // Mark, While loop head
  int loc_index = -1;              // index into Program::locations(), filled by resolution
  SourcePos pos;

  static StmtPtr assign(std::string var, ExprPtr value, SourcePos pos = {}, int slot = -1);
  static StmtPtr block(std::vector<StmtPtr> body, SourcePos pos = {});
  static StmtPtr if_else(ExprPtr cond, StmtPtr then_s, StmtPtr else_s, SourcePos pos = {});
  static StmtPtr while_loop(ExprPtr cond, StmtPtr body, std::optional<LocationId> head,
                            SourcePos pos = {});
  static StmtPtr assume(ExprPtr cond, SourcePos pos = {});
  static StmtPtr mark(LocationId loc, SourcePos pos = {});

  const StmtPtr& then_branch() const { return children[0]; }
  const StmtPtr* else_branch() const { return children.size() > 1 ? &children[1] : nullptr; }
  const StmtPtr& loop_body() const { return children[0]; }
};

/// Declared input with an inclusive range; unbounded when `lo`/`hi` are absent.
struct InputDecl {
  std::string name;
  std::optional<Int> lo;
  std::optional<Int> hi;

  bool bounded() const { return lo.has_value() && hi.has_value(); }
};

}  // namespace polyinv
