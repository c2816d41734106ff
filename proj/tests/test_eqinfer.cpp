#include "helpers.hpp"

#include "polyinv/eqinfer/eqinfer.hpp"
#include "polyinv/simplify/simplify.hpp"

#include <doctest.h>

using namespace polyinv;

namespace {

EqInferResult infer_at(const Program& p, const char* loc, std::optional<int> degree = {}) {
  Verifier v(p, {});
  EqInferConfig cfg;
  cfg.degree = degree;
  return infer_equalities(p, LocationId(loc), v, cfg);
}

}  // namespace

TEST_SUITE("eqinfer") {

TEST_CASE("term templates") {
  CHECK(create_terms({"x", "y", "z"}, 2).size() == 10);
  CHECK(create_terms({"a", "b", "q", "r", "x", "y"}, 2).size() == 28);
  auto t = create_terms({"x", "y"}, 2);
  CHECK(t.front().is_constant());
  CHECK(t.back().to_string({"x", "y"}) == "x^2");
  CHECK_THROWS_AS(create_terms({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(create_terms({"x"}, 0), std::invalid_argument);
}

TEST_CASE("automatic degree") {
  CHECK(auto_degree(4, 200) == 5);
  CHECK(auto_degree(12, 200) == 2);
  CHECK(auto_degree(6, 200) == 3);
  CHECK(auto_degree(40, 10) == 1);
  for (std::size_t n = 1; n <= 10; ++n) {
    int d = auto_degree(n, 200);
    if (term_count(n, 1) <= 200) {
      CHECK(term_count(n, d) <= 200);
      CHECK(term_count(n, d + 1) > 200);
    }
  }
}

TEST_CASE("extraction skips zero vectors and canonicalizes") {
  std::vector<std::string> vars{"x", "y"};
  auto terms = create_terms(vars, 1);  // 1, y, x
  std::vector<RatVec> basis{{Rational(0), Rational(0), Rational(0)},
                            {Rational(-1, 2), Rational(0), Rational(1, 4)}};
  auto eqs = extract_eqts(basis, vars, terms);
  REQUIRE(eqs.size() == 1);
  CHECK(eqs[0].to_poly_string() == "x - 2");
}

TEST_CASE("reduced basis is unique for a span") {
  std::vector<std::string> vars{"x", "y"};
  auto terms = create_terms(vars, 2);
  std::vector<Equality> a{Equality::parse("x == y"), Equality::parse("x^2 == y^2")};
  std::vector<Equality> b{Equality::parse("x^2 - y^2 + x - y == 0"), Equality::parse("x == y")};
  auto ra = reduced_basis(a, vars, terms), rb = reduced_basis(b, vars, terms);
  CHECK(ra == rb);
  for (std::size_t i = 0; i < ra.size(); ++i)
    for (std::size_t j = 0; j < ra.size(); ++j)
      if (i != j) CHECK(ra[j].poly().coeff(ra[i].leading_monomial()) == 0);
}

TEST_CASE("cohendiv equalities at both locations") {
  Program p = load_program(testing::corpus("cohendiv.mpl"));
  auto l1 = infer_at(p, "L1", 2);
  CHECK(l1.status == EqStatus::Ok);
  CHECK(l1.term_count == 28);
  std::vector<Equality> want{Equality::parse("a*y == b"), Equality::parse("x == q*y + r")};
  CHECK(l1.equalities.size() == 3);
  for (const auto& w : want) CHECK(is_implied_eq(l1.equalities, w, 2));
  auto l2 = infer_at(p, "L2", 2);
  REQUIRE(l2.equalities.size() == 1);
  CHECK(l2.equalities[0] == Equality::parse("x == q*y + r"));
  CHECK(l2.accepted_on_box);
}

TEST_CASE("every inferred equality holds on the whole box") {
  for (const char* name : {"cohendiv.mpl", "sqrt1.mpl", "ps2.mpl", "geo1.mpl", "hola42.mpl"}) {
    Program p = load_program(testing::corpus(name));
    for (const auto& loc : p.locations()) {
      auto res = infer_at(p, loc.id.label.c_str());
      auto traces = testing::brute_traces(p, loc.id);
      for (const auto& e : res.equalities) {
        Equality ee = e.embed(loc.vars);
        for (const auto& t : traces) CHECK_MESSAGE(ee.holds(t), name, " ", ee.to_string());
      }
    }
  }
}

TEST_CASE("refinement converges to a fixed point") {
  Program p = load_program(testing::corpus("sqrt1.mpl"));
  auto res = infer_at(p, "L1");
  CHECK(res.iterations >= 1);
  CHECK(res.iterations <= 50);
  CHECK(res.traces.size() >= res.term_count);
}

TEST_CASE("unreachable and starved locations") {
  Program p = parse_program("inputs a in [0,3]; if (a > 5) { [U] x = 1; } [E]");
  auto u = infer_at(p, "U");
  CHECK(u.status == EqStatus::Unreachable);
  auto e = infer_at(p, "E");
  CHECK(e.status == EqStatus::Ok);
  CHECK(e.degree_reduced);
  Program c = load_program(testing::corpus("const.mpl"));
  auto k = infer_at(c, "L");
  REQUIRE(k.equalities.size() == 1);
  CHECK(k.equalities[0] == Equality::parse("x == 5"));
}

TEST_CASE("variable restriction") {
  Program p = load_program(testing::corpus("cohendiv.mpl"));
  Verifier v(p, {});
  EqInferConfig cfg;
  cfg.degree = 2;
  cfg.vars = std::vector<std::string>{"q", "r", "x", "y"};
  auto res = infer_equalities(p, LocationId("L1"), v, cfg);
  REQUIRE(res.equalities.size() == 1);
  CHECK(res.equalities[0] == Equality::parse("x == q*y + r").embed(res.vars));
}

}  // TEST_SUITE
