#include "helpers.hpp"

#include "polyinv/cli/commands.hpp"
#include "polyinv/cli/corpus.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polyinv;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "polyinv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("polyinv_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config validation and options") {
  Config c;
  CHECK_NOTHROW(c.validate());
  c.alpha = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  Config d;
  d.set_option("degree", "2");
  CHECK(d.degree == 2);
  d.set_option("mode", "random");
  CHECK(d.mode == VerifyMode::Random);
  d.set_option("budget", "500");
  CHECK(d.verify_budget().max_inputs == 500);
  CHECK(d.verify_budget().samples == 500);
  CHECK_THROWS_AS(d.set_option("colour", "red"), std::invalid_argument);
  CHECK_THROWS_AS(d.set_option("degree", "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mode("fast"), std::invalid_argument);
}

TEST_CASE("infer on the division program") {
  auto r = cli({"infer", testing::corpus("cohendiv.mpl"), "--degree", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q*y + r == x") != std::string::npos);
  CHECK(r.out.find("a*y == b") != std::string::npos);
  CHECK(r.out.find("r - y <= -1") != std::string::npos);
}

TEST_CASE("location filter") {
  auto r = cli({"infer", testing::corpus("cohendiv.mpl"), "--degree", "2", "--locations", "L2",
                "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == kSchemaVersion);
  REQUIRE(j["locations"].size() == 1);
  CHECK(j["locations"][0]["location"] == "L2");
  auto bad = cli({"infer", testing::corpus("cohendiv.mpl"), "--locations", "L7"});
  CHECK(bad.code == 1);
}

TEST_CASE("constant program") {
  auto r = cli({"infer", testing::corpus("const.mpl"), "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["locations"][0]["equalities"] == nlohmann::json::array({"x == 5"}));
}

TEST_CASE("json omits timings unless asked") {
  auto plain = cli({"infer", testing::corpus("const.mpl"), "--format", "json"});
  CHECK(plain.out.find("\"ms\"") == std::string::npos);
  auto timed = cli({"infer", testing::corpus("const.mpl"), "--format", "json", "--timings"});
  CHECK(timed.out.find("\"ms\"") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"infer"}).code == 2);
  CHECK(cli({"infer", testing::corpus("const.mpl"), "--mode", "psychic"}).code == 2);
  CHECK(cli({"infer", testing::corpus("const.mpl"), "--alpha", "0"}).code == 2);
  CHECK(cli({"infer", "/nonexistent/file.mpl"}).code == 1);
  auto d = scratch("syntax");
  write(d / "bad.mpl", "x = ;\n");
  auto r = cli({"infer", (d / "bad.mpl").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("1:5") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("trace mode over exported traces") {
  auto d = scratch("traces");
  auto ex = cli({"exec", testing::corpus("cohendiv.mpl"), "--locations", "L1"});
  REQUIRE(ex.code == 0);
  write(d / "t.csv", ex.out);
  auto r = cli({"traces", (d / "t.csv").string(), "--degree", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  auto eqs = j["locations"][0]["equalities"];
  CHECK(std::find(eqs.begin(), eqs.end(), "q*y + r == x") != eqs.end());
  CHECK(j["locations"][0]["verified"] == false);

  write(d / "one.csv", "loc,x,y\nL,3,4\n");
  auto one = cli({"traces", (d / "one.csv").string(), "--format", "json"});
  REQUIRE(one.code == 0);
  auto jo = nlohmann::json::parse(one.out);
  CHECK(jo["locations"][0]["status"] == "not-enough-traces");
  CHECK(jo["locations"][0]["octagons"].size() > 0);

  write(d / "bad.csv", "loc,x,y\nL,3\n");
  CHECK(cli({"traces", (d / "bad.csv").string()}).code == 1);
}

TEST_CASE("sidecar parsing") {
  Sidecar s = parse_sidecar("# c\noption degree 2\nL1: x == q*y + r\nL2: r <= y - 1\nbounds: 0; n + 1\n");
  CHECK(s.options.size() == 1);
  CHECK(s.expectations.size() == 2);
  CHECK(std::holds_alternative<Equality>(s.expectations[0].pred));
  CHECK(std::holds_alternative<OctConstraint>(s.expectations[1].pred));
  CHECK(s.has_bounds);
  CHECK(s.bounds.size() == 2);
  CHECK_THROWS_AS(parse_sidecar("L1 x == y\n"), SidecarError);
  CHECK_THROWS_AS(parse_sidecar("L1: x*y <= 3\n"), SidecarError);
}

TEST_CASE("corpus runner") {
  auto empty = scratch("empty");
  auto r0 = cli({"corpus", empty.string()});
  CHECK(r0.code == 0);
  CHECK(r0.out.find("0/0") != std::string::npos);

  auto d = scratch("corpus");
  fs::copy_file(testing::corpus("const.mpl"), d / "const.mpl");
  fs::copy_file(testing::corpus("const.expected"), d / "const.expected");
  write(d / "plain.mpl", "inputs a in [0,3]; x = a + 1; [L]\n");
  std::vector<std::string> warnings;
  Config cfg;
  auto entries = run_corpus(d.string(), cfg, &warnings);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "const");
  CHECK(entries[0].pass);
  CHECK_FALSE(entries[1].has_sidecar);
  REQUIRE(warnings.size() == 1);
  CHECK(cli({"corpus", d.string()}).code == 0);

  write(d / "plain.expected", "L: x == a + 2\n");
  auto again = run_corpus(d.string(), cfg);
  CHECK_FALSE(again[1].pass);
  auto r = cli({"corpus", d.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("NO") != std::string::npos);
}

TEST_CASE("structured corpus output is byte-stable across worker counts") {
  auto d = scratch("stable");
  for (const char* n : {"cohendiv", "hola42", "absval"}) {
    fs::copy_file(testing::corpus(std::string(n) + ".mpl"), d / (std::string(n) + ".mpl"));
    fs::copy_file(testing::corpus(std::string(n) + ".expected"), d / (std::string(n) + ".expected"));
  }
  auto a = cli({"corpus", d.string(), "--format", "json"});
  auto b = cli({"corpus", d.string(), "--format", "json", "--jobs", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

}  // TEST_SUITE
