#include "polyinv/lang/program.hpp"

#include <sstream>

namespace polyinv {
namespace {

constexpr int kUnaryPrec = 7;

int expr_prec(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Binary: return precedence(e.bop);
    case Expr::Kind::Unary: return kUnaryPrec;
    case Expr::Kind::Literal: return e.value < 0 ? kUnaryPrec : 8;
    case Expr::Kind::Variable: return 8;
  }
  return 8;
}

void print(const Expr& e, std::ostream& os);

void print_child(const Expr& e, int min_prec, std::ostream& os) {
  if (expr_prec(e) < min_prec) {
    os << '(';
    print(e, os);
    os << ')';
  } else {
    print(e, os);
  }
}

void print(const Expr& e, std::ostream& os) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      os << e.value.get_str();
      return;
    case Expr::Kind::Variable:
      os << e.name;
      return;
    case Expr::Kind::Unary: {
      os << (e.uop == UnaryOp::Neg ? '-' : '!');
      const Expr& a = *e.lhs;
      bool starts_minus = (a.kind == Expr::Kind::Unary && a.uop == UnaryOp::Neg) ||
                          (a.kind == Expr::Kind::Literal && a.value < 0);
      if (starts_minus || expr_prec(a) < kUnaryPrec) {
        os << '(';
        print(a, os);
        os << ')';
      } else {
        print(a, os);
      }
      return;
    }
    case Expr::Kind::Binary: {
      int p = precedence(e.bop);
      print_child(*e.lhs, p, os);
      os << ' ' << op_symbol(e.bop) << ' ';
      print_child(*e.rhs, p + 1, os);
      return;
    }
  }
}

void indent(std::ostream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

void print_stmt(const Stmt& s, std::ostream& os, int depth);

void print_block_body(const Stmt& b, std::ostream& os, int depth) {
  os << "{\n";
  for (const auto& c : b.children) print_stmt(*c, os, depth + 1);
  indent(os, depth);
  os << "}";
}

void print_stmt(const Stmt& s, std::ostream& os, int depth) {
  indent(os, depth);
  switch (s.kind) {
    case Stmt::Kind::Assign:
      os << s.var << " = ";
      print(*s.expr, os);
      os << ";\n";
      return;
    case Stmt::Kind::Block:
      print_block_body(s, os, depth);
      os << "\n";
      return;
    case Stmt::Kind::If:
      os << "if (";
      print(*s.expr, os);
      os << ") ";
      print_block_body(*s.then_branch(), os, depth);
      if (s.else_branch()) {
        os << " else ";
        print_block_body(**s.else_branch(), os, depth);
      }
      os << "\n";
      return;
    case Stmt::Kind::While:
      os << "while ";
      if (s.label) os << "[" << s.label->label << "] ";
      os << "(";
      print(*s.expr, os);
      os << ") ";
      print_block_body(*s.loop_body(), os, depth);
      os << "\n";
      return;
    case Stmt::Kind::Assume:
      os << "assume(";
      print(*s.expr, os);
      os << ");\n";
      return;
    case Stmt::Kind::Mark:
      os << "[" << s.label->label << "]\n";
      return;
  }
}

}  // namespace

std::string print_expr(const Expr& e) {
  std::ostringstream os;
  print(e, os);
  return os.str();
}

std::string print_program(const Program& p) {
  std::ostringstream os;
  os << "program " << p.name() << ";\n";
  if (!p.inputs().empty()) {
    os << "inputs ";
    for (std::size_t i = 0; i < p.inputs().size(); ++i) {
      const auto& in = p.inputs()[i];
      if (i) os << ", ";
      os << in.name;
      if (in.bounded()) os << " in [" << in.lo->get_str() << ", " << in.hi->get_str() << "]";
    }
    os << ";\n";
  }
  for (const auto& c : p.body()->children) print_stmt(*c, os, 0);
  return os.str();
}

}  // namespace polyinv
