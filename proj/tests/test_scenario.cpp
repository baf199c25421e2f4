#include "fillkit/scenario.hpp"

#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <string>

using namespace fillkit;
using namespace fillkit::scenario;

namespace {

Report run(const std::string& text) { return run_scenario_text(text, Options{}); }

}  // namespace

TEST_CASE("a passing scenario") {
  auto ok = run(R"({"title": "p5",
    "commands": [
      {"op": "generate_pn", "args": {"n": 5}, "bind": "P5", "expect": {"verified": true}},
      {"op": "filling_invariants", "args": {"factorization": "$P5"}, "expect": {"h1": "Z + Z/5", "euler": 1}}
    ]})");
  CHECK(ok.exit_code == 0);
  CHECK(ok.body["summary"]["passed"] == 2);
  CHECK(ok.body["commands"][1]["status"] == "pass");
}

TEST_CASE("expectation failures give exit 1") {
  auto r = run(R"({"commands": [
      {"op": "cokernel", "args": {"matrix": [[2, 0], [0, 3]]}, "expect": "Z/5"}]})");
  CHECK(r.exit_code == 1);
  CHECK(r.body["commands"][0]["status"] == "fail");
  CHECK(r.body["commands"][0]["output"] == "Z/6");
}

TEST_CASE("commands without expectations are reported ok") {
  auto r = run(R"({"commands": [{"op": "determinant", "args": {"matrix": [[2, 1], [1, 1]]}}]})");
  CHECK(r.exit_code == 0);
  CHECK(r.body["commands"][0]["status"] == "ok");
  CHECK(r.body["commands"][0]["output"] == 1);
}

TEST_CASE("empty scenario passes") {
  auto r = run(R"({"title": "empty", "commands": []})");
  CHECK(r.exit_code == 0);
  CHECK(r.body["summary"]["total"] == 0);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(run(R"({"commands": [{"op": "frobnicate", "args": {}}]})"), InputError);
  CHECK_THROWS_AS(run(R"({"commands": [{"op": "cokernel", "args": {}, "extra": 1}]})"), InputError);
  CHECK_THROWS_AS(run(R"({"commands": [{"op": "cokernel", "args": {"matrix": "$nowhere"}}]})"), InputError);
  CHECK_THROWS_AS(run(R"({"commands": {}})"), InputError);
  CHECK_THROWS_WITH_AS(run("{\n  \"commands\": [\n    {\"op\": }\n  ]\n}"), doctest::Contains("line 3"), InputError);
}

TEST_CASE("runtime failures are errors unless expected") {
  auto r = run(R"({"commands": [{"op": "hurwitz_move", "args": {"factorization": "S1_3: a1, a2", "position": 9}}]})");
  CHECK(r.exit_code == 2);
  CHECK(r.body["commands"][0]["status"] == "error");
  auto e = run(R"({"commands": [{"op": "hurwitz_move",
      "args": {"factorization": "S1_3: a1, a2", "position": 9}, "expect": {"error": true}}]})");
  CHECK(e.exit_code == 0);
  CHECK(e.body["commands"][0]["status"] == "pass");
}

TEST_CASE("large integers travel as strings") {
  auto r = run(R"({"commands": [
      {"op": "determinant", "args": {"matrix": [["100000000000000000000", 0], [0, "100000000000000000000"]]}},
      {"op": "determinant", "args": {"matrix": [[3, 0], [0, 4]]}, "expect": "12"}]})");
  CHECK(r.exit_code == 0);
  CHECK(r.body["commands"][0]["output"] == "10000000000000000000000000000000000000000");
}

TEST_CASE("reports are deterministic") {
  const std::string text = R"({"commands": [
      {"op": "generate_pn", "args": {"n": 3}, "bind": "P"},
      {"op": "cap_factorization", "args": {"factorization": "$P", "boundary": 3}, "bind": "C"},
      {"op": "descend", "args": {"factorization": "$C"}, "bind": "B"},
      {"op": "band_double_cover", "args": {"bands": "$B"}, "expect": "Z/3"}]})";
  auto a = run(text), b = run(text);
  CHECK(a.exit_code == 0);
  CHECK(a.body.dump() == b.body.dump());
  CHECK(a.body.dump().find("wall_ms") == std::string::npos);
}

TEST_CASE("operation registry") {
  const auto& ops = operation_names();
  CHECK(std::is_sorted(ops.begin(), ops.end()));
  for (const char* op : {"smith_normal_form", "todd_coxeter", "generate_pn", "descend", "verify_derivation"})
    CHECK(std::find(ops.begin(), ops.end(), op) != ops.end());
}

TEST_CASE("built-in reproduction suite passes and the flipped sign does not") {
  auto r = run_paper_suite(Options{});
  CHECK(r.exit_code == 0);
  Options flipped;
  flipped.sign = -1;
  CHECK(run_paper_suite(flipped).exit_code == 1);
}

TEST_CASE("the schema lists exactly the registered operations") {
  std::ifstream in(FILLKIT_DATA_DIR "/../schema/scenario.schema.json");
  REQUIRE(in);
  const auto schema = json::parse(in);
  auto listed = schema["properties"]["commands"]["items"]["properties"]["op"]["enum"].get<std::vector<std::string>>();
  std::sort(listed.begin(), listed.end());
  CHECK(listed == operation_names());
}
