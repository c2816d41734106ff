#include "helpers.hpp"

#include "polyinv/complexity/complexity.hpp"

#include <doctest.h>

using namespace polyinv;

namespace {

TraceSet traces_of(const std::vector<std::string>& vars, const std::vector<std::vector<int>>& rows) {
  TraceSet ts(LocationId("EXIT"), vars);
  for (const auto& r : rows) {
    std::vector<Int> v(r.begin(), r.end());
    ts.add(v, v);
  }
  return ts;
}

}  // namespace

TEST_SUITE("complexity") {

TEST_CASE("selection prefers the highest counter degree") {
  std::vector<Equality> eqs{Equality::parse("t == n + 1"), Equality::parse("t^2 == n*t + t"),
                            Equality::parse("n == m")};
  auto r = select_counter_relation(eqs, "t");
  REQUIRE(r);
  CHECK(r->t_degree == 2);
  CHECK_FALSE(select_counter_relation({Equality::parse("n == m")}, "t"));
}

TEST_CASE("linear relations divide directly") {
  CounterRelation rel{Equality::parse("2*t == 2*n*m + 2*n"), "t", 1};
  auto b = extract_bounds(rel, traces_of({"m", "n", "t"}, {{1, 2, 4}, {0, 3, 3}}));
  REQUIRE(b.bounds.size() == 1);
  CHECK(b.bounds[0] == parse_polynomial("m*n + n", {"m", "n"}));
  CHECK(b.identity_holds);
}

TEST_CASE("factored relations split into roots") {
  // t * (t - n - 1) * (t - 2*m) over a grid where either root occurs
  std::vector<std::string> vars{"m", "n", "t"};
  Polynomial t = parse_polynomial("t", vars);
  Polynomial rel = t * (t - parse_polynomial("n + 1", vars)) * (t - parse_polynomial("2*m", vars));
  std::vector<std::vector<int>> rows;
  for (int m = 0; m < 6; ++m)
    for (int n = 0; n < 6; ++n) {
      if (n == 0) rows.push_back({m, n, 0});
      else if (n <= m) rows.push_back({m, n, n + 1});
      else rows.push_back({m, n, 2 * m});
    }
  CounterRelation cr{Equality::from_polynomial(rel), "t", 3};
  auto b = extract_bounds(cr, traces_of(vars, rows));
  CHECK(b.identity_holds);
  CHECK(b.t_power == 1);
  std::set<std::string> got;
  for (const auto& g : b.bounds) got.insert(g.to_string());
  CHECK(got == std::set<std::string>{"0", "n + 1", "2*m"});
  CHECK(b.residual.is_constant());
}

TEST_CASE("bounds from a quadratic loop nest") {
  Program p = parse_program("inputs n in [0,12]; i = 0; while (i < n) { j = 0; "
                            "while (j < i) { j = j + 1; } i = i + 1; } [L]");
  VerifyBudget budget;
  ComplexityConfig cfg;
  auto ci = infer_counter_relation(p, budget, cfg);
  REQUIRE(ci.relation);
  auto b = extract_bounds(*ci.relation, ci.traces, cfg);
  CHECK(b.identity_holds);
  // t = n + n(n-1)/2 on every run
  for (const auto& row : ci.traces.rows()) {
    Int n = row[ci.traces.var_index("n")], tv = row[ci.traces.var_index("t")];
    CHECK(tv == n + n * (n - 1) / 2);
  }
  REQUIRE(b.bounds.size() == 1);
  CHECK(b.bounds[0] == parse_polynomial("n^2 + n", {"n"}) * Rational(1, 2));
}

TEST_CASE("relation holds on every exit trace") {
  Program p = load_program(testing::corpus("triple.mpl"));
  auto ci = infer_counter_relation(p, {}, {});
  REQUIRE(ci.relation);
  const Equality& rel = ci.relation->relation;
  REQUIRE(rel.vars() == ci.traces.vars());
  for (const auto& row : ci.traces.rows()) CHECK(rel.holds(row));
  CHECK(ci.traces.size() == 343);
}

}  // TEST_SUITE
