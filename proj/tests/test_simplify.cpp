#include "helpers.hpp"

#include "polyinv/simplify/octagon_closure.hpp"
#include "polyinv/simplify/simplify.hpp"

#include <doctest.h>

#include <random>

using namespace polyinv;

namespace {

OctConstraint oc(const char* s) { return *OctConstraint::parse(s); }

}  // namespace

TEST_SUITE("simplify") {

TEST_CASE("x - y implies x^2 - y^2") {
  InvariantSet s{{Equality::parse("x == y"), Equality::parse("x^2 == y^2")}, {}};
  InvariantSet r = remove_redundant(s);
  REQUIRE(r.equalities.size() == 1);
  CHECK(r.equalities[0] == Equality::parse("x == y"));
  CHECK(remove_redundant(r) == r);
  CHECK(is_implied_eq({Equality::parse("x == y")}, Equality::parse("x^2 == y^2"), 2));
  CHECK_FALSE(is_implied_eq({Equality::parse("x^2 == y^2")}, Equality::parse("x == y"), 2));
}

TEST_CASE("ideal span membership") {
  IdealSpan s({"a", "b", "y"}, 3);
  s.add(Equality::parse("b == a*y"));
  CHECK(s.contains(Equality::parse("b*y == a*y^2")));
  CHECK(s.contains(Equality::parse("2*b - 2*a*y + a*b - a^2*y == 0")));
  CHECK_FALSE(s.contains(Equality::parse("b == a")));
  CHECK_FALSE(s.contains(Equality::parse("b^2*y^2 == a^2*y^4")));  // beyond the cap
}

TEST_CASE("dbm closure derives transitive bounds") {
  OctagonDbm d({"x", "y", "z"});
  d.add(oc("x - y <= 1"));
  d.add(oc("y - z <= 2"));
  d.add(oc("z <= 0"));
  REQUIRE(d.close());
  CHECK(d.bound(OctTerm::pair(1, "x", -1, "z")) == 3);
  CHECK(d.bound(OctTerm::single(1, "x")) == 3);
  CHECK_FALSE(d.bound(OctTerm::single(-1, "x")));
  CHECK(d.entails(oc("x + z <= 3")));
  CHECK_FALSE(d.entails(oc("x <= 2")));
}

TEST_CASE("dbm integer tightening") {
  OctagonDbm d({"x", "y"});
  d.add(oc("x + y <= 3"));
  d.add(oc("x - y <= 0"));
  REQUIRE(d.close());
  // 2x <= 3 over the integers gives x <= 1
  CHECK(d.bound(OctTerm::single(1, "x")) == 1);
}

TEST_CASE("unsatisfiable octagons entail everything") {
  OctagonDbm d({"x"});
  d.add(oc("x <= -1"));
  d.add(oc("x >= 1"));
  CHECK_FALSE(d.close());
  CHECK(d.unsat());
  CHECK(d.entails(oc("x <= -100")));
}

TEST_CASE("dbm bounds agree with brute force on random systems") {
  std::mt19937_64 rng(17);
  std::vector<std::string> vars{"a", "b", "c"};
  auto terms = enumerate_oct_terms(vars);
  for (int it = 0; it < 40; ++it) {
    std::vector<OctConstraint> cs;
    for (int k = 0; k < 5; ++k)
      cs.push_back({terms[rng() % terms.size()], Int(static_cast<long>(rng() % 9) - 2)});
    for (const auto& v : vars) {
      cs.push_back({OctTerm::single(1, v), Int(6)});
      cs.push_back({OctTerm::single(-1, v), Int(6)});
    }
    OctagonDbm d(vars);
    for (const auto& c : cs) d.add(c);
    bool sat = d.close();
    bool any = false;
    std::vector<std::optional<Int>> best(terms.size());
    for (int a = -6; a <= 6; ++a)
      for (int b = -6; b <= 6; ++b)
        for (int c = -6; c <= 6; ++c) {
          std::vector<Int> pt{a, b, c};
          bool ok = std::all_of(cs.begin(), cs.end(), [&](const auto& x) { return x.holds(vars, pt); });
          if (!ok) continue;
          any = true;
          for (std::size_t i = 0; i < terms.size(); ++i) {
            Int v = terms[i].eval(vars, pt);
            if (!best[i] || v > *best[i]) best[i] = v;
          }
        }
    REQUIRE(sat == any);
    if (!sat) continue;
    for (std::size_t i = 0; i < terms.size(); ++i) CHECK(d.bound(terms[i]) == best[i]);
  }
}

TEST_CASE("redundant octagons are removed in a fixed order") {
  InvariantSet s{{}, {oc("x <= 3"), oc("y <= 2"), oc("x - y <= 1"), oc("x <= 5")}};
  auto r = remove_redundant(s);
  CHECK(std::find(r.octagons.begin(), r.octagons.end(), oc("x <= 5")) == r.octagons.end());
  CHECK(remove_redundant(r) == r);
  // equalities contribute their octagons
  InvariantSet e{{Equality::parse("x == y + 1")}, {oc("y <= 2"), oc("x <= 3")}};
  auto re = remove_redundant(e);
  CHECK(re.octagons.size() == 1);
  CHECK(is_implied_oct(e, oc("x - y <= 1")));
}

TEST_CASE("simplification is idempotent on random equality sets") {
  std::mt19937_64 rng(23);
  const char* pool[] = {"x == y", "x^2 == y^2", "x*z == y*z", "z == 1", "x == z", "x^2 == x*y",
                        "y^2 == 1", "x*y == 1", "x + y == 2"};
  for (int it = 0; it < 30; ++it) {
    InvariantSet s;
    for (int k = 0; k < 4; ++k) s.equalities.push_back(Equality::parse(pool[rng() % 9]));
    auto r = remove_redundant(s);
    CHECK(remove_redundant(r) == r);
    // everything dropped is still implied by what is kept
    int d = 0;
    for (const auto& e : s.equalities) d = std::max(d, e.degree());
    for (const auto& e : s.equalities) CHECK(is_implied_eq(r.equalities, e, d));
  }
}

}  // TEST_SUITE
