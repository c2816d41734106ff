#include "polyinv/lang/program.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <unordered_map>

namespace polyinv {

const char* op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return 1;
    case BinaryOp::And: return 2;
    case BinaryOp::Eq:
    case BinaryOp::Ne: return 3;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Ge:
    case BinaryOp::Gt: return 4;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 5;
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: return 6;
  }
  return 0;
}

ExprPtr Expr::literal(Int v, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Literal;
  e->value = std::move(v);
  e->pos = pos;
  return e;
}

ExprPtr Expr::variable(std::string name, SourcePos pos, int slot) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Variable;
  e->name = std::move(name);
  e->slot = slot;
  e->pos = pos;
  return e;
}

ExprPtr Expr::unary(UnaryOp op, ExprPtr operand, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Unary;
  e->uop = op;
  e->lhs = std::move(operand);
  e->pos = pos;
  return e;
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr l, ExprPtr r, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Binary;
  e->bop = op;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  e->pos = pos;
  return e;
}

StmtPtr Stmt::assign(std::string var, ExprPtr value, SourcePos pos, int slot) {
  auto s = std::make_shared<Stmt>();
  s->kind = Kind::Assign;
  s->var = std::move(var);
  s->slot = slot;
  s->expr = std::move(value);
  s->pos = pos;
  return s;
}

StmtPtr Stmt::block(std::vector<StmtPtr> body, SourcePos pos) {
  auto s = std::make_shared<Stmt>();
  s->kind = Kind::Block;
  s->children = std::move(body);
  s->pos = pos;
  return s;
}

StmtPtr Stmt::if_else(ExprPtr cond, StmtPtr then_s, StmtPtr else_s, SourcePos pos) {
  auto s = std::make_shared<Stmt>();
  s->kind = Kind::If;
  s->expr = std::move(cond);
  s->children.push_back(std::move(then_s));
  if (else_s) s->children.push_back(std::move(else_s));
  s->pos = pos;
  return s;
}

StmtPtr Stmt::while_loop(ExprPtr cond, StmtPtr body, std::optional<LocationId> head,
                         SourcePos pos) {
  auto s = std::make_shared<Stmt>();
  s->kind = Kind::While;
  s->expr = std::move(cond);
  s->children.push_back(std::move(body));
  s->label = std::move(head);
  s->pos = pos;
  return s;
}

StmtPtr Stmt::assume(ExprPtr cond, SourcePos pos) {
  auto s = std::make_shared<Stmt>();
  s->kind = Kind::Assume;
  s->expr = std::move(cond);
  s->pos = pos;
  return s;
}

StmtPtr Stmt::mark(LocationId loc, SourcePos pos) {
  auto s = std::make_shared<Stmt>();
  s->kind = Kind::Mark;
  s->label = std::move(loc);
  s->pos = pos;
  return s;
}

ParseError::ParseError(Code code, SourcePos pos, const std::string& msg)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
                         msg),
      code_(code),
      pos_(pos) {}

namespace {

void collect_assigned(const Stmt& s, std::set<std::string>& out) {
  if (s.kind == Stmt::Kind::Assign) out.insert(s.var);
  for (const auto& c : s.children) collect_assigned(*c, out);
}

void collect_names(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Variable) out.insert(e.name);
  if (e.lhs) collect_names(*e.lhs, out);
  if (e.rhs) collect_names(*e.rhs, out);
}

void collect_names(const Stmt& s, std::set<std::string>& out) {
  if (s.kind == Stmt::Kind::Assign) out.insert(s.var);
  if (s.expr) collect_names(*s.expr, out);
  for (const auto& c : s.children) collect_names(*c, out);
}

class Resolver {
 public:
  Resolver(std::vector<std::string>& slot_names, std::vector<LocationInfo>& locs,
           std::set<std::string> assigned_anywhere)
      : slot_names_(slot_names), locs_(locs), assigned_(std::move(assigned_anywhere)) {}

  int slot_of(const std::string& name) {
    auto it = slots_.find(name);
    if (it != slots_.end()) return it->second;
    int slot = static_cast<int>(slot_names_.size());
    slot_names_.push_back(name);
    slots_.emplace(name, slot);
    return slot;
  }

  int define(const std::string& name) {
    int slot = slot_of(name);
    defined_.insert(name);
    return slot;
  }

  bool defined(const std::string& name) const { return defined_.count(name) != 0; }

  std::vector<int> defined_slots() const {
    std::vector<int> out;
    for (const auto& n : defined_) out.push_back(slots_.at(n));
    std::sort(out.begin(), out.end());
    return out;
  }

  ExprPtr expr(const ExprPtr& e) {
    switch (e->kind) {
      case Expr::Kind::Literal:
        return e;
      case Expr::Kind::Variable: {
        if (!defined(e->name)) {
          if (assigned_.count(e->name))
            throw ParseError(ParseError::Code::Unassigned, e->pos,
                             "variable '" + e->name + "' may be read before assignment");
          throw ParseError(ParseError::Code::UndeclaredVariable, e->pos,
                           "undeclared variable '" + e->name + "'");
        }
        return Expr::variable(e->name, e->pos, slots_.at(e->name));
      }
      case Expr::Kind::Unary:
        return Expr::unary(e->uop, expr(e->lhs), e->pos);
      case Expr::Kind::Binary:
        return Expr::binary(e->bop, expr(e->lhs), expr(e->rhs), e->pos);
    }
    return e;
  }

  int mark(const LocationId& id, SourcePos pos, bool loop_head) {
    for (const auto& l : locs_)
      if (l.id == id)
        throw ParseError(ParseError::Code::DuplicateLocation, pos,
                         "duplicate location '" + id.label + "'");
    LocationInfo info;
    info.id = id;
    info.pos = pos;
    info.loop_head = loop_head;
    for (const auto& n : defined_) {
      info.vars.push_back(n);
      info.slots.push_back(slots_.at(n));
    }
    locs_.push_back(std::move(info));
    return static_cast<int>(locs_.size()) - 1;
  }

  StmtPtr block(const StmtPtr& s) {
    std::vector<StmtPtr> body;
    body.reserve(s->children.size());
    for (const auto& c : s->children) body.push_back(stmt(c));
    return Stmt::block(std::move(body), s->pos);
  }

  StmtPtr stmt(const StmtPtr& s) {
    switch (s->kind) {
      case Stmt::Kind::Assign: {
        ExprPtr v = expr(s->expr);
        return Stmt::assign(s->var, v, s->pos, define(s->var));
      }
      case Stmt::Kind::Block:
        return block(s);
      case Stmt::Kind::If: {
        ExprPtr c = expr(s->expr);
        auto before = defined_;
        StmtPtr t = block(s->then_branch());
        auto after_then = std::move(defined_);
        defined_ = before;
        StmtPtr e = s->else_branch() ? block(*s->else_branch()) : nullptr;
        std::set<std::string> both;
        std::set_intersection(after_then.begin(), after_then.end(), defined_.begin(),
                              defined_.end(), std::inserter(both, both.end()));
        defined_ = std::move(both);
        return Stmt::if_else(c, t, e, s->pos);
      }
      case Stmt::Kind::While: {
        has_loop = true;
        int idx = s->label ? mark(*s->label, s->pos, true) : -1;
        ExprPtr c = expr(s->expr);
        auto before = defined_;
        StmtPtr body = block(s->loop_body());
        defined_ = std::move(before);
        auto w = std::make_shared<Stmt>(*Stmt::while_loop(c, body, s->label, s->pos));
        w->loc_index = idx;
        return w;
      }
      case Stmt::Kind::Assume:
        return Stmt::assume(expr(s->expr), s->pos);
      case Stmt::Kind::Mark: {
        auto m = std::make_shared<Stmt>(*s);
        m->loc_index = mark(*s->label, s->pos, false);
        return m;
      }
    }
    return s;
  }

  bool has_loop = false;

 private:
  std::vector<std::string>& slot_names_;
  std::vector<LocationInfo>& locs_;
  std::set<std::string> assigned_;
  std::map<std::string, int> slots_;
  std::set<std::string> defined_;
};

}  // namespace

Program build_program(std::string name, std::vector<InputDecl> inputs, StmtPtr body) {
  Program p;
  p.name_ = std::move(name);
  if (!body || body->kind != Stmt::Kind::Block) body = Stmt::block({body});

  std::set<std::string> assigned;
  collect_assigned(*body, assigned);
  Resolver r(p.slot_names_, p.locations_, assigned);
  for (const auto& in : inputs) {
    if (r.defined(in.name))
      throw ParseError(ParseError::Code::Other, body->pos, "duplicate input '" + in.name + "'");
    p.input_slots_.push_back(r.define(in.name));
  }
  p.body_ = r.block(body);
  p.top_level_slots_ = r.defined_slots();
  p.has_loop_ = r.has_loop;
  p.inputs_ = std::move(inputs);

  for (std::size_t i = 0; i < p.locations_.size(); ++i)
    p.location_index_.emplace(p.locations_[i].id, i);

  std::set<std::string> names;
  for (const auto& in : p.inputs_) names.insert(in.name);
  collect_names(*p.body_, names);
  p.all_names_.assign(names.begin(), names.end());
  return p;
}

bool Program::has_location(const LocationId& id) const {
  return location_index_.count(id) != 0;
}

const LocationInfo& Program::location(const LocationId& id) const {
  auto it = location_index_.find(id);
  if (it == location_index_.end())
    throw std::out_of_range("unknown location '" + id.label + "'");
  return locations_[it->second];
}

std::vector<std::string> extract_vars(const Program& p, const LocationId& loc) {
  return p.location(loc).vars;
}

std::optional<LocationId> exit_location(const Program& p) {
  const auto& body = p.body()->children;
  if (body.empty() || body.back()->kind != Stmt::Kind::Mark) return std::nullopt;
  return body.back()->label;
}

}  // namespace polyinv
