#include "polyinv/invariant/equality.hpp"
#include "polyinv/invariant/octagon.hpp"

#include <doctest.h>

#include <set>

using namespace polyinv;

TEST_SUITE("invariant") {

TEST_CASE("equalities are canonical") {
  Equality a = Equality::parse("x == q*y + r");
  Equality b = Equality::parse("-2*q*y - 2*r + 2*x == 0");
  CHECK(a == b);
  CHECK(a.to_string() == "q*y + r == x");
  CHECK(a.to_poly_string() == "q*y + r - x");
  CHECK(a.holds({Int(3), Int(1), Int(13), Int(4)}));
  CHECK_FALSE(a.holds({Int(3), Int(2), Int(13), Int(4)}));
  CHECK_THROWS_AS(Equality::parse("x == x"), std::invalid_argument);
  Equality c = Equality::parse("t^2 + 2*t + 1 == 4*s");
  CHECK(c.to_string() == "t^2 + 2*t + 1 == 4*s");
  CHECK(c.degree() == 2);
}

TEST_CASE("equality embedding keeps the relation") {
  Equality a = Equality::parse("x == 5");
  Equality e = a.embed({"w", "x"});
  CHECK(e.vars() == std::vector<std::string>{"w", "x"});
  CHECK(e.holds({Int(9), Int(5)}));
}

TEST_CASE("octagon terms enumerate 2n + 4*C(n,2)") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(std::string(1, static_cast<char>('a' + i)));
    auto ts = enumerate_oct_terms(vars);
    CHECK(ts.size() == 2 * n + 2 * n * (n - 1));
    std::set<std::string> names;
    for (const auto& t : ts) CHECK(names.insert(t.to_string()).second);
  }
}

TEST_CASE("octagon parsing and printing") {
  auto c = OctConstraint::parse("r <= y - 1");
  REQUIRE(c);
  CHECK(c->to_string() == "r - y <= -1");
  auto s = OctConstraint::parse("a + y > 1");
  REQUIRE(s);
  CHECK(s->to_string() == "-a - y <= -2");
  auto g = OctConstraint::parse("2*x >= 3");
  REQUIRE(g);
  CHECK(g->to_string() == "-x <= -2");
  CHECK_FALSE(OctConstraint::parse("x + 2*y <= 1"));
  CHECK_FALSE(OctConstraint::parse("x*y <= 1"));
  CHECK_FALSE(OctConstraint::parse("x + y + z <= 1"));
}

TEST_CASE("octagon evaluation") {
  OctTerm t = OctTerm::pair(-1, "y", 1, "b");
  CHECK(t.v1 == "b");
  CHECK(t.a1 == 1);
  std::vector<std::string> vars{"b", "y"};
  CHECK(t.eval(vars, {Int(4), Int(3)}) == 1);
  BoundOctTerm bt = BoundOctTerm::bind(t.negated(), vars);
  CHECK(bt.eval({Int(4), Int(3)}) == -1);
  CHECK_THROWS_AS(OctTerm::pair(1, "x", 1, "x"), std::invalid_argument);
}

}  // TEST_SUITE
