#pragma once

#include "polyinv/lang/ast.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace polyinv {

enum class Tok {
  Ident, Number,
  KwProgram, KwInputs, KwIn, KwIf, KwElse, KwWhile, KwAssume, KwSkip, KwTrue, KwFalse,
  LParen, RParen, LBrace, RBrace, LBracket, RBracket, Comma, Semi,
  Assign, PlusAssign, MinusAssign, StarAssign, PlusPlus, MinusMinus,
  Plus, Minus, Star, Slash, Percent,
  Lt, Le, EqEq, Ne, Ge, Gt, AndAnd, OrOr, Bang,
  End
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

const char* token_name(Tok t);

/// Splits `.mpl` text into tokens; the last token is always Tok::End.
/// Throws ParseError on an unknown character.
std::vector<Token> tokenize(std::string_view text);

}  // namespace polyinv
