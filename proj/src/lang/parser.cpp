#include "polyinv/lang/lexer.hpp"
#include "polyinv/lang/program.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace polyinv {
namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program parse(std::string default_name) {
    std::string name = std::move(default_name);
    if (accept(Tok::KwProgram)) {
      name = expect(Tok::Ident).text;
      expect(Tok::Semi);
    }
    std::vector<InputDecl> inputs;
    if (accept(Tok::KwInputs)) {
      do {
        inputs.push_back(input_decl());
      } while (accept(Tok::Comma));
      expect(Tok::Semi);
    }
    SourcePos start = peek().pos;
    std::vector<StmtPtr> body;
    while (peek().kind != Tok::End) statement_into(body);
    return build_program(std::move(name), std::move(inputs), Stmt::block(std::move(body), start));
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(Tok k) {
    if (peek().kind != k) fail(std::string("expected ") + token_name(k));
    return next();
  }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(ParseError::Code::Syntax, t.pos, what + ", found " + found);
  }

  Int signed_number() {
    bool neg = accept(Tok::Minus);
    Int v = parse_int(expect(Tok::Number).text);
    return neg ? Int(-v) : v;
  }

  InputDecl input_decl() {
    InputDecl d;
    const Token& id = expect(Tok::Ident);
    d.name = id.text;
    if (accept(Tok::KwIn)) {
      expect(Tok::LBracket);
      d.lo = signed_number();
      expect(Tok::Comma);
      d.hi = signed_number();
      expect(Tok::RBracket);
      if (*d.lo > *d.hi)
        throw ParseError(ParseError::Code::Other, id.pos,
                         "empty range for input '" + d.name + "'");
    }
    return d;
  }

  LocationId label() {
    expect(Tok::LBracket);
    LocationId id(expect(Tok::Ident).text);
    expect(Tok::RBracket);
    return id;
  }

  // Body of if/while: always stored as a block.
  StmtPtr branch() {
    SourcePos pos = peek().pos;
    if (peek().kind == Tok::LBrace) return block();
    std::vector<StmtPtr> body;
    statement_into(body);
    return Stmt::block(std::move(body), pos);
  }

  StmtPtr block() {
    SourcePos pos = expect(Tok::LBrace).pos;
    std::vector<StmtPtr> body;
    while (peek().kind != Tok::RBrace) {
      if (peek().kind == Tok::End) fail("expected '}'");
      statement_into(body);
    }
    next();
    return Stmt::block(std::move(body), pos);
  }

  void statement_into(std::vector<StmtPtr>& out) {
    const Token& t = peek();
    SourcePos pos = t.pos;
    switch (t.kind) {
      case Tok::Semi:
        next();
        return;
      case Tok::KwSkip:
        next();
        expect(Tok::Semi);
        return;
      case Tok::LBracket:
        out.push_back(Stmt::mark(label(), pos));
        return;
      case Tok::LBrace:
        out.push_back(block());
        return;
      case Tok::KwIf: {
        next();
        expect(Tok::LParen);
        ExprPtr c = expr();
        expect(Tok::RParen);
        StmtPtr then_s = branch();
        StmtPtr else_s;
        if (accept(Tok::KwElse)) else_s = branch();
        out.push_back(Stmt::if_else(c, then_s, else_s, pos));
        return;
      }
      case Tok::KwWhile: {
        next();
        std::optional<LocationId> head;
        if (peek().kind == Tok::LBracket) head = label();
        expect(Tok::LParen);
        ExprPtr c = expr();
        expect(Tok::RParen);
        out.push_back(Stmt::while_loop(c, branch(), head, pos));
        return;
      }
      case Tok::KwAssume: {
        next();
        expect(Tok::LParen);
        ExprPtr c = expr();
        expect(Tok::RParen);
        expect(Tok::Semi);
        out.push_back(Stmt::assume(c, pos));
        return;
      }
      case Tok::Ident: {
        std::string var = next().text;
        ExprPtr target = Expr::variable(var, pos);
        Tok op = next().kind;
        ExprPtr value;
        switch (op) {
          case Tok::Assign: value = expr(); break;
          case Tok::PlusAssign: value = Expr::binary(BinaryOp::Add, target, expr(), pos); break;
          case Tok::MinusAssign: value = Expr::binary(BinaryOp::Sub, target, expr(), pos); break;
          case Tok::StarAssign: value = Expr::binary(BinaryOp::Mul, target, expr(), pos); break;
          case Tok::PlusPlus:
            value = Expr::binary(BinaryOp::Add, target, Expr::literal(1, pos), pos);
            break;
          case Tok::MinusMinus:
            value = Expr::binary(BinaryOp::Sub, target, Expr::literal(1, pos), pos);
            break;
          default:
            --pos_;
            fail("expected assignment operator");
        }
        expect(Tok::Semi);
        out.push_back(Stmt::assign(std::move(var), value, pos));
        return;
      }
      default:
        fail("expected statement");
    }
  }

  ExprPtr expr() { return or_expr(); }

  ExprPtr or_expr() {
    ExprPtr l = and_expr();
    while (peek().kind == Tok::OrOr) {
      SourcePos pos = next().pos;
      l = Expr::binary(BinaryOp::Or, l, and_expr(), pos);
    }
    return l;
  }

  ExprPtr and_expr() {
    ExprPtr l = eq_expr();
    while (peek().kind == Tok::AndAnd) {
      SourcePos pos = next().pos;
      l = Expr::binary(BinaryOp::And, l, eq_expr(), pos);
    }
    return l;
  }

  ExprPtr eq_expr() {
    ExprPtr l = rel_expr();
    for (;;) {
      BinaryOp op;
      if (peek().kind == Tok::EqEq) op = BinaryOp::Eq;
      else if (peek().kind == Tok::Ne) op = BinaryOp::Ne;
      else return l;
      SourcePos pos = next().pos;
      l = Expr::binary(op, l, rel_expr(), pos);
    }
  }

  ExprPtr rel_expr() {
    ExprPtr l = add_expr();
    for (;;) {
      BinaryOp op;
      switch (peek().kind) {
        case Tok::Lt: op = BinaryOp::Lt; break;
        case Tok::Le: op = BinaryOp::Le; break;
        case Tok::Ge: op = BinaryOp::Ge; break;
        case Tok::Gt: op = BinaryOp::Gt; break;
        default: return l;
      }
      SourcePos pos = next().pos;
      l = Expr::binary(op, l, add_expr(), pos);
    }
  }

  ExprPtr add_expr() {
    ExprPtr l = mul_expr();
    for (;;) {
      BinaryOp op;
      if (peek().kind == Tok::Plus) op = BinaryOp::Add;
      else if (peek().kind == Tok::Minus) op = BinaryOp::Sub;
      else return l;
      SourcePos pos = next().pos;
      l = Expr::binary(op, l, mul_expr(), pos);
    }
  }

  ExprPtr mul_expr() {
    ExprPtr l = unary_expr();
    for (;;) {
      BinaryOp op;
      switch (peek().kind) {
        case Tok::Star: op = BinaryOp::Mul; break;
        case Tok::Slash: op = BinaryOp::Div; break;
        case Tok::Percent: op = BinaryOp::Mod; break;
        default: return l;
      }
      SourcePos pos = next().pos;
      l = Expr::binary(op, l, unary_expr(), pos);
    }
  }

  ExprPtr unary_expr() {
    SourcePos pos = peek().pos;
    if (accept(Tok::Minus)) return Expr::unary(UnaryOp::Neg, unary_expr(), pos);
    if (accept(Tok::Bang)) return Expr::unary(UnaryOp::Not, unary_expr(), pos);
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    SourcePos pos = t.pos;
    switch (t.kind) {
      case Tok::Number: return Expr::literal(parse_int(next().text), pos);
      case Tok::KwTrue: next(); return Expr::literal(1, pos);
      case Tok::KwFalse: next(); return Expr::literal(0, pos);
      case Tok::Ident: return Expr::variable(next().text, pos);
      case Tok::LParen: {
        next();
        ExprPtr e = expr();
        expect(Tok::RParen);
        return e;
      }
      default:
        fail("expected expression");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse_program(std::string_view text, std::string default_name) {
  return Parser(tokenize(text)).parse(std::move(default_name));
}

Program load_program(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str(), std::filesystem::path(path).stem().string());
}

}  // namespace polyinv
