#pragma once

// Scenario files: an ordered list of operations with optional expected
// outputs, run into a deterministic JSON report.
//
// {
//   "title": "...",
//   "commands": [
//     {"op": "generate_pn", "args": {"n": 5}, "bind": "P5"},
//     {"op": "filling_invariants", "args": {"factorization": "$P5"},
//      "expect": {"h1": "Z + Z/5"}}
//   ]
// }
//
// A string "$name" anywhere in args is replaced by the output bound to name.
// An object expectation checks only the keys it lists; {"error": true}
// expects the command to fail.

#include "fillkit/serialize.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace fillkit::scenario {

using io::json;

struct Options {
  std::size_t max_cosets = 10000;
  std::size_t planar_budget = 1'000'000;
  int sign = 1;          // -1 flips the Picard-Lefschetz sign
  bool timings = false;  // adds wall times, which breaks byte-identical reports
  std::filesystem::path base_dir = ".";
};

/// Malformed file, unknown operation or reference: exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  json body;
  int exit_code = 0;  // 0 all pass, 1 an expectation failed, 2 input error
};

const std::vector<std::string>& operation_names();

Report run_scenario_text(const std::string& text, const Options& opt);
Report run_scenario_file(const std::filesystem::path& path, Options opt);

/// Reproduces every in-scope computation; failures appear in the report.
Report run_paper_suite(const Options& opt);

/// Writes the shipped derivation scripts (star consequence, P_3 chain).
void emit_derivations(const std::filesystem::path& dir);

}  // namespace fillkit::scenario
