#include "polyinv/lang/lexer.hpp"

#include "polyinv/lang/program.hpp"

#include <cctype>
#include <unordered_map>

namespace polyinv {

const char* token_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "integer literal";
    case Tok::KwProgram: return "'program'";
    case Tok::KwInputs: return "'inputs'";
    case Tok::KwIn: return "'in'";
    case Tok::KwIf: return "'if'";
    case Tok::KwElse: return "'else'";
    case Tok::KwWhile: return "'while'";
    case Tok::KwAssume: return "'assume'";
    case Tok::KwSkip: return "'skip'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Assign: return "'='";
    case Tok::PlusAssign: return "'+='";
    case Tok::MinusAssign: return "'-='";
    case Tok::StarAssign: return "'*='";
    case Tok::PlusPlus: return "'++'";
    case Tok::MinusMinus: return "'--'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Percent: return "'%'";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::EqEq: return "'=='";
    case Tok::Ne: return "'!='";
    case Tok::Ge: return "'>='";
    case Tok::Gt: return "'>'";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Bang: return "'!'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  static const std::unordered_map<std::string_view, Tok> keywords = {
      {"program", Tok::KwProgram}, {"inputs", Tok::KwInputs}, {"in", Tok::KwIn},
      {"if", Tok::KwIf},           {"else", Tok::KwElse},     {"while", Tok::KwWhile},
      {"assume", Tok::KwAssume},   {"skip", Tok::KwSkip},     {"true", Tok::KwTrue},
      {"false", Tok::KwFalse}};

  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourcePos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string_view word = text.substr(i, j - i);
      auto kw = keywords.find(word);
      out.push_back({kw == keywords.end() ? Tok::Ident : kw->second, std::string(word), pos});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() &&
          (std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        throw ParseError(ParseError::Code::Syntax, pos, "malformed integer literal");
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }

    auto two = [&](char a, char b) {
      return c == a && i + 1 < text.size() && text[i + 1] == b;
    };
    Tok kind;
    std::size_t len = 2;
    if (two('<', '=')) kind = Tok::Le;
    else if (two('>', '=')) kind = Tok::Ge;
    else if (two('=', '=')) kind = Tok::EqEq;
    else if (two('!', '=')) kind = Tok::Ne;
    else if (two('&', '&')) kind = Tok::AndAnd;
    else if (two('|', '|')) kind = Tok::OrOr;
    else if (two('+', '+')) kind = Tok::PlusPlus;
    else if (two('-', '-')) kind = Tok::MinusMinus;
    else if (two('+', '=')) kind = Tok::PlusAssign;
    else if (two('-', '=')) kind = Tok::MinusAssign;
    else if (two('*', '=')) kind = Tok::StarAssign;
    else {
      len = 1;
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case ',': kind = Tok::Comma; break;
        case ';': kind = Tok::Semi; break;
        case '=': kind = Tok::Assign; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '%': kind = Tok::Percent; break;
        case '<': kind = Tok::Lt; break;
        case '>': kind = Tok::Gt; break;
        case '!': kind = Tok::Bang; break;
        default:
          throw ParseError(ParseError::Code::Syntax, pos,
                           std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({kind, std::string(text.substr(i, len)), pos});
    advance(len);
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

}  // namespace polyinv
