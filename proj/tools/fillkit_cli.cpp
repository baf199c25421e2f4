// fillkit: runs scenario files or the built-in reproduction suite (--paper-suite) and writes a JSON report.

#include "fillkit/scenario.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace fillkit;
  CLI::App app{"Checks positive factorizations, braid descents and filling invariants"};
  std::string scenario_path, report_path, emit_dir;
  bool paper_suite = false, flip = false, list_ops = false;
  scenario::Options opt;
  app.add_option("--scenario", scenario_path, "Scenario file (JSON)");
  app.add_flag("--paper-suite", paper_suite, "Run the built-in reproduction suite");
  app.add_option("--max-cosets", opt.max_cosets, "Coset budget for Todd-Coxeter")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--planar-budget", opt.planar_budget, "Largest number of matrices the planar enumeration may visit")
      ->capture_default_str();
  app.add_option("--report", report_path, "Write the report here instead of standard output");
  app.add_flag("--timings", opt.timings, "Include wall times (reports are then not byte-identical)");
  app.add_flag("--flip-sign", flip, "Use the opposite Picard-Lefschetz sign");
  app.add_option("--emit-derivations", emit_dir, "Write the shipped derivation scripts to this directory");
  app.add_flag("--list-ops", list_ops, "List scenario operations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (flip) opt.sign = -1;

  if (list_ops) {
    for (const auto& op : scenario::operation_names()) std::cout << op << "\n";
    return 0;
  }
  if (!emit_dir.empty()) {
    try {
      scenario::emit_derivations(emit_dir);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    if (scenario_path.empty() && !paper_suite) return 0;
  }
  if (scenario_path.empty() == !paper_suite) {
    std::cerr << "error: give exactly one of --scenario or --paper-suite\n";
    return 2;
  }

  scenario::Report report;
  try {
    report = paper_suite ? scenario::run_paper_suite(opt) : scenario::run_scenario_file(scenario_path, opt);
  } catch (const scenario::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = report.body.dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return 2;
    }
  }
  return report.exit_code;
}
