#include "helpers.hpp"

#include "polyinv/exec/interpreter.hpp"
#include "polyinv/exec/trace_csv.hpp"

#include <doctest.h>

#include <sstream>

using namespace polyinv;

TEST_SUITE("exec") {

TEST_CASE("integer semantics truncate toward zero") {
  Program p = parse_program("inputs a in [-9,9], b in [-9,9]; assume(b != 0); q = a / b; r = a % b; [L]");
  for (int a = -9; a <= 9; ++a)
    for (int b = -9; b <= 9; ++b) {
      auto r = run(p, {Int(a), Int(b)});
      if (b == 0) {
        CHECK(r.status == RunStatus::AssumeViolated);
        continue;
      }
      REQUIRE(r.status == RunStatus::Ok);
      // vars: a, b, q, r
      CHECK(r.traces[0].values[2] == a / b);
      CHECK(r.traces[0].values[3] == a % b);
    }
}

TEST_CASE("division by zero is a runtime error") {
  Program p = parse_program("inputs a in [0,1]; x = 1 / a; [L]");
  auto r = run(p, {Int(0)});
  CHECK(r.status == RunStatus::RuntimeError);
  CHECK(r.error_pos.line == 1);
  CHECK(run(p, {Int(1)}).status == RunStatus::Ok);
}

TEST_CASE("unbounded arithmetic versus 64-bit wrap") {
  Program p = parse_program("x = 1; i = 0; while (i < 70) { x = 2 * x; i = i + 1; } [L]");
  auto big = run(p, {});
  CHECK(big.traces[0].values[1] == Int(1) << 70);
  RunOptions w;
  w.wrap64 = true;
  auto wrapped = run(p, {}, w);
  CHECK(wrapped.traces[0].values[1] == 0);
}

TEST_CASE("step budget reports divergence") {
  Program p = parse_program("x = 0; while (1) { x = x + 1; } [L]");
  RunOptions o;
  o.max_steps = 1000;
  auto r = run(p, {}, o);
  CHECK(r.status == RunStatus::Diverged);
  CHECK(r.steps >= 1000);
}

TEST_CASE("logical operators short-circuit") {
  Program p = parse_program("inputs a in [0,1]; x = (a == 0) || (1 / a > 0); y = a && 1 / a; [L]");
  CHECK(run(p, {Int(0)}).status == RunStatus::Ok);
  auto r = run(p, {Int(1)});
  CHECK(r.traces[0].values == std::vector<Int>{Int(1), Int(1), Int(1)});
}

TEST_CASE("trace cap samples uniformly and keeps visit order") {
  Program p = parse_program("inputs n in [0,1000]; i = 0; while [L] (i < n) { i = i + 1; }");
  RunOptions o;
  o.trace_cap = 50;
  o.seed = 7;
  auto r = run(p, {Int(1000)}, o);
  REQUIRE(r.traces.size() == 50);
  CHECK(r.truncated);
  CHECK(r.visits[0] == 1001);
  for (std::size_t i = 1; i < r.traces.size(); ++i) CHECK(r.traces[i - 1].values[0] < r.traces[i].values[0]);
  auto again = run(p, {Int(1000)}, o);
  for (std::size_t i = 0; i < r.traces.size(); ++i) CHECK(r.traces[i].values == again.traces[i].values);
}

TEST_CASE("exec_many is independent of the worker count") {
  Program p = load_program(testing::corpus("cohendiv.mpl"));
  BoxEnumerator box(p);
  std::vector<Input> ins;
  for (std::uint64_t i = 0; i < box.size(); ++i) ins.push_back(box.at(i));
  LocationId l1("L1");
  ExecStats s1, s4;
  TraceSet a = exec_many(p, l1, ins, {}, 1, &s1);
  TraceSet b = exec_many(p, l1, ins, {}, 4, &s4);
  CHECK(a.rows() == b.rows());
  CHECK(s1.ok == ins.size());
  CHECK(a.size() == testing::brute_traces(p, l1).size());
}

TEST_CASE("trace set dedups and remembers origins") {
  TraceSet t(LocationId("L"), {"x", "y"});
  CHECK(t.add({Int(1), Int(2)}, {Int(5)}));
  CHECK_FALSE(t.add({Int(1), Int(2)}, {Int(6)}));
  CHECK(t.size() == 1);
  CHECK(t.origin(0) == Input{Int(5)});
  CHECK(t.var_index("y") == 1);
  CHECK(t.var_index("q") == -1);
}

TEST_CASE("csv round trip") {
  TraceSet a(LocationId("L1"), {"q", "r"});
  a.add({Int(0), Int(15)}, {});
  a.add({Int(-4), Int(123456789012345678)}, {});
  TraceSet b(LocationId("L2"), {"x"});
  b.add({Int(3)}, {});
  std::ostringstream os;
  write_trace_csv(os, {a, b});
  std::istringstream is(os.str());
  auto back = read_trace_csv(is);
  REQUIRE(back.size() == 2);
  CHECK(back[0].vars() == a.vars());
  CHECK(back[0].rows() == a.rows());
  CHECK(back[1].location().label == "L2");
}

TEST_CASE("csv errors") {
  auto bad = [](const std::string& s) {
    std::istringstream is(s);
    CHECK_THROWS_AS(read_trace_csv(is), CsvError);
  };
  bad("L1,1,2\n");
  bad("loc,x,y\nL1,1\n");
  bad("loc,x\nL1,abc\n");
  bad("loc,x\nL1,1\nloc,y\nL1,2\n");
}

}  // TEST_SUITE
