#include "helpers.hpp"

#include "polyinv/lang/lexer.hpp"
#include "polyinv/lang/program.hpp"

#include <doctest.h>

#include <filesystem>

using namespace polyinv;

TEST_SUITE("lang") {

TEST_CASE("lexer splits operators and skips comments") {
  auto toks = tokenize("x += 2; // note\ny-- <= -3 && !z");
  std::vector<Tok> kinds;
  for (const auto& t : toks) kinds.push_back(t.kind);
  std::vector<Tok> want{Tok::Ident, Tok::PlusAssign, Tok::Number, Tok::Semi, Tok::Ident,
                        Tok::MinusMinus, Tok::Le, Tok::Minus, Tok::Number, Tok::AndAnd,
                        Tok::Bang, Tok::Ident, Tok::End};
  CHECK(kinds == want);
  CHECK(toks[4].pos.line == 2);
  CHECK(toks[4].pos.column == 1);
  CHECK_THROWS_AS(tokenize("x = 1 $ 2;"), ParseError);
}

TEST_CASE("header, inputs and locations") {
  Program p = parse_program(
      "program demo;\n"
      "inputs x in [1,30], y in [-2,2], z;\n"
      "a = x; while [L1] (a > 0) { a = a - 1; } [L2]\n");
  CHECK(p.name() == "demo");
  REQUIRE(p.inputs().size() == 3);
  CHECK(p.inputs()[0].bounded());
  CHECK(*p.inputs()[1].lo == -2);
  CHECK_FALSE(p.inputs()[2].bounded());
  REQUIRE(p.locations().size() == 2);
  CHECK(p.locations()[0].loop_head);
  CHECK(extract_vars(p, LocationId("L1")) == std::vector<std::string>{"a", "x", "y", "z"});
  CHECK(p.has_loop());
  CHECK_THROWS_AS(p.location(LocationId("L9")), std::out_of_range);
}

TEST_CASE("visibility follows definite assignment") {
  Program p = parse_program(
      "inputs n in [0,5];\n"
      "i = 0;\n"
      "if (n > 2) { y = 1; w = 1; } else { y = 2; }\n"
      "while (i < n) { k = i; i = i + 1; }\n"
      "[L]\n");
  CHECK(extract_vars(p, LocationId("L")) == std::vector<std::string>{"i", "n", "y"});
}

TEST_CASE("static errors") {
  auto code = [](const char* src) {
    try {
      parse_program(src);
    } catch (const ParseError& e) {
      return e.code();
    }
    return ParseError::Code::Other;
  };
  CHECK(code("x = 1; [L] [L]") == ParseError::Code::DuplicateLocation);
  CHECK(code("x = y;") == ParseError::Code::UndeclaredVariable);
  CHECK(code("inputs c in [0,1]; if (c) { y = 1; } x = y;") == ParseError::Code::Unassigned);
  CHECK(code("x = (1;") == ParseError::Code::Syntax);
  CHECK(code("inputs x in [3,1]; y = x;") != ParseError::Code::Syntax);
  try {
    parse_program("x = 1;\n  y = ;");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos().line == 2);
    CHECK(std::string(e.what()).rfind("2:", 0) == 0);
  }
}

TEST_CASE("compound assignments desugar") {
  Program p = parse_program("inputs x in [0,9]; y = x; y += 3; y *= 2; y--; y -= x; [L]");
  RunOptions o;
  RunResult r = run(p, {Int(4)}, o);
  REQUIRE(r.status == RunStatus::Ok);
  REQUIRE(r.traces.size() == 1);
  CHECK(r.traces[0].values == std::vector<Int>{Int(4), Int(9)});
}

TEST_CASE("printer round-trips every corpus program") {
  for (const auto& entry : std::filesystem::directory_iterator(POLYINV_CORPUS_DIR)) {
    if (entry.path().extension() != ".mpl") continue;
    Program p = load_program(entry.path().string());
    std::string once = print_program(p);
    Program q = parse_program(once, p.name());
    CHECK_MESSAGE(print_program(q) == once, entry.path());
    CHECK(q.locations().size() == p.locations().size());
  }
}

TEST_CASE("printer keeps precedence") {
  Program p = parse_program("inputs a in [0,3], b in [0,3]; x = (a - b) - (a - b); "
                            "y = a - (b - 1); z = -(-a) * (b + 1); [L]");
  Program q = parse_program(print_program(p));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      auto r1 = run(p, {Int(a), Int(b)});
      auto r2 = run(q, {Int(a), Int(b)});
      CHECK(r1.traces[0].values == r2.traces[0].values);
    }
}

TEST_CASE("counter instrumentation") {
  Program p = load_program(testing::corpus("triple.mpl"));
  Program q = instrument_counter(p);
  auto vars = extract_vars(q, LocationId("L"));
  CHECK(std::find(vars.begin(), vars.end(), "t") != vars.end());
  RunResult r = run(q, {Int(0), Int(0), Int(0)});
  REQUIRE(r.status == RunStatus::Ok);
  CHECK(exit_location(q) == LocationId("L"));

  Program loopless = parse_program("x = 1;");
  CHECK_THROWS_AS(instrument_counter(loopless), std::invalid_argument);
  Program e = instrument_counter(loopless, true);
  REQUIRE(exit_location(e));
  CHECK(exit_location(e)->label == "EXIT");
  CHECK_THROWS_AS(instrument_counter(parse_program("t = 1; while (t < 2) { t = t + 1; }")),
                  std::invalid_argument);
}

TEST_CASE("counter counts loop iterations") {
  Program q = instrument_counter(parse_program(
      "inputs n in [0,6]; i = 0; while (i < n) { j = 0; while (j < i) { j = j + 1; } i = i + 1; }"));
  for (int n = 0; n <= 6; ++n) {
    auto r = run(q, {Int(n)});
    const auto& vars = q.location(*exit_location(q)).vars;
    auto ti = std::find(vars.begin(), vars.end(), "t") - vars.begin();
    CHECK(r.traces.back().values[ti] == n + n * (n - 1) / 2);
  }
}

}  // TEST_SUITE
