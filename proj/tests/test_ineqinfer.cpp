#include "helpers.hpp"
#include "stub_oracle.hpp"

#include "polyinv/ineqinfer/ineqinfer.hpp"

#include <doctest.h>

using namespace polyinv;

TEST_SUITE("ineqinfer") {

TEST_CASE("halving search on a scripted verifier") {
  // probe -5 finds r - y = -3, probe -2 finds r - y = -1
  testing::ScriptedOracle o({"r", "y"}, {{-5, {Int(0), Int(3)}}, {-2, {Int(0), Int(1)}}});
  OctTerm term = OctTerm::pair(1, "r", -1, "y");
  auto res = find_upper_bound(term, Int(-10), Int(10), o, LocationId("L"), {"r", "y"});
  CHECK(res.bounded());
  CHECK(res.k == -1);
  CHECK(o.probes == std::vector<long>{0, -5, -1, -2});
  REQUIRE(res.probes.size() == 4);
  CHECK(res.probes[1].refuted);
  CHECK(*res.probes[1].observed == -3);
}

TEST_CASE("observed value above the range means unbounded") {
  testing::ScriptedOracle o({"x"}, {{0, {Int(50)}}});
  auto res = find_upper_bound(OctTerm::single(1, "x"), Int(-10), Int(10), o, LocationId("L"), {"x"});
  CHECK_FALSE(res.bounded());
  CHECK(o.probes.size() == 1);
}

TEST_CASE("lower bound mirrors the upper bound") {
  Program p = parse_program("inputs a in [-7,4]; x = a; [L]");
  Verifier v(p, {});
  auto lo = find_lower_bound(OctTerm::single(1, "x"), Int(-10), Int(10), v, LocationId("L"), {"a", "x"});
  CHECK(lo.bounded());
  CHECK(lo.k == -7);
  auto hi = find_upper_bound(OctTerm::single(1, "x"), Int(-10), Int(10), v, LocationId("L"), {"a", "x"});
  CHECK(hi.k == 4);
  CHECK_THROWS_AS(find_upper_bound(OctTerm::single(1, "x"), Int(3), Int(2), v, LocationId("L"), {"a", "x"}),
                  std::invalid_argument);
}

TEST_CASE("search takes a logarithmic number of probes") {
  for (int target = -10; target <= 10; ++target) {
    Program p = parse_program("inputs a in [-10," + std::to_string(target) + "]; x = a; [L]");
    Verifier v(p, {});
    auto r = find_upper_bound(OctTerm::single(1, "x"), Int(-10), Int(10), v, LocationId("L"), {"a", "x"});
    CHECK(r.k == target);
    CHECK(r.probes.size() <= 6);
  }
}

TEST_CASE("octagon bounds equal brute-force extrema") {
  for (const char* name : {"cohendiv.mpl", "absval.mpl", "hola42.mpl"}) {
    Program p = load_program(testing::corpus(name));
    for (const auto& loc : p.locations()) {
      Verifier v(p, {});
      auto res = infer_octagons(p, loc.id, v);
      auto traces = testing::brute_traces(p, loc.id);
      for (const auto& t : res.terms) {
        BoundOctTerm bt = BoundOctTerm::bind(t.term, loc.vars);
        Int mx = bt.eval(traces.at(0));
        for (const auto& row : traces) mx = std::max(mx, Int(bt.eval(row)));
        if (mx > 10) {
          CHECK_FALSE(t.result.bounded());
        } else {
          REQUIRE_MESSAGE(t.result.bounded(), name, " ", t.term.to_string());
          CHECK_MESSAGE(t.result.k == std::max(mx, Int(-10)), name, " ", t.term.to_string());
        }
      }
    }
  }
}

}  // TEST_SUITE
