#include "polyinv/lang/program.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyinv {
namespace {

StmtPtr add_increments(const StmtPtr& s, const std::string& t) {
  switch (s->kind) {
    case Stmt::Kind::Block: {
      std::vector<StmtPtr> body;
      for (const auto& c : s->children) body.push_back(add_increments(c, t));
      return Stmt::block(std::move(body), s->pos);
    }
    case Stmt::Kind::If:
      return Stmt::if_else(s->expr, add_increments(s->then_branch(), t),
                           s->else_branch() ? add_increments(*s->else_branch(), t) : nullptr,
                           s->pos);
    case Stmt::Kind::While: {
      StmtPtr inner = add_increments(s->loop_body(), t);
      std::vector<StmtPtr> body;
      body.push_back(Stmt::assign(
          t, Expr::binary(BinaryOp::Add, Expr::variable(t), Expr::literal(1)), s->pos));
      for (const auto& c : inner->children) body.push_back(c);
      return Stmt::while_loop(s->expr, Stmt::block(std::move(body), inner->pos), s->label,
                              s->pos);
    }
    default:
      return s;
  }
}

}  // namespace

Program instrument_counter(const Program& p, bool allow_loop_free, const std::string& counter) {
  const auto& names = p.all_names();
  if (std::binary_search(names.begin(), names.end(), counter))
    throw std::invalid_argument("variable '" + counter + "' is already used in program '" +
                                p.name() + "'");
  if (!p.has_loop() && !allow_loop_free)
    throw std::invalid_argument("program '" + p.name() + "' has no loop");

  StmtPtr body = add_increments(p.body(), counter);
  std::vector<StmtPtr> stmts;
  stmts.push_back(Stmt::assign(counter, Expr::literal(0), p.body()->pos));
  for (const auto& c : body->children) stmts.push_back(c);
  if (!exit_location(p)) {
    std::string label = "EXIT";
    for (int k = 1; p.has_location(LocationId(label)); ++k) label = "EXIT" + std::to_string(k);
    stmts.push_back(Stmt::mark(LocationId(label)));
  }
  return build_program(p.name(), p.inputs(), Stmt::block(std::move(stmts), body->pos));
}

}  // namespace polyinv
