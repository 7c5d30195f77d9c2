// detloci: characteristic-class invariants of determinantal hypersurfaces.
//
//   detloci report <file> [--json]
//   detloci table <table1|table2> [--check] [--json]
//   detloci verify [--depth N]
//
// Exit codes: 0 success, 1 check or verification failure, 2 input error,
// 3 guard violation.

#include "detloci/config.hpp"
#include "detloci/tables.hpp"
#include "detloci/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kGuardViolation = 3;

int run_report(const std::string& file, bool json) {
  const detloci::InstanceConfig config = detloci::load_config(file);
  const detloci::InvariantReport report = detloci::evaluate(config);
  if (json) {
    nlohmann::json doc = {{"config", detloci::to_json(config)},
                          {"report", detloci::to_json(report)}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << detloci::render_report(report, config);
  }
  return kOk;
}

int run_table(const std::string& name, bool check, bool json) {
  const detloci::TableResult table = detloci::evaluate_table(name);
  if (json) {
    std::cout << detloci::to_json(table).dump(2) << '\n';
  } else {
    std::cout << detloci::render_table(table);
  }
  if (check) {
    const int bad = table.mismatches();
    (json ? std::cerr : std::cout)
        << (bad == 0 ? "check: all cells match\n"
                     : "check: " + std::to_string(bad) + " cell(s) differ\n");
    return bad == 0 ? kOk : kMismatch;
  }
  return kOk;
}

int run_verify(int depth) {
  const auto start = std::chrono::steady_clock::now();
  detloci::VerifyOptions options;
  options.depth = depth;
  int failed = 0;
  for (const detloci::SuiteResult& suite : detloci::run_verification(options)) {
    std::cout << (suite.passed() ? "PASS " : "FAIL ") << suite.name << ": "
              << suite.cases - suite.failures << "/" << suite.cases << '\n';
    for (const std::string& message : suite.messages) {
      std::cout << "     " << message << '\n';
    }
    if (!suite.passed()) ++failed;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::cout << (failed == 0 ? "all suites passed" : "suites failed: " +
                                                         std::to_string(failed))
            << " (depth " << depth << ", " << seconds << " s)\n";
  return failed == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of general determinantal hypersurfaces"};
  app.require_subcommand(1);

  std::string file;
  bool report_json = false;
  auto* report = app.add_subcommand("report", "Evaluate one instance config");
  report->add_option("file", file, "Instance config (JSON)")->required();
  report->add_flag("--json", report_json, "Emit a JSON document");

  std::string table_name;
  bool check = false;
  bool table_json = false;
  auto* table = app.add_subcommand("table", "Reproduce a published table");
  table->add_option("name", table_name, "table1 or table2")->required();
  table->add_flag("--check", check, "Compare against the published values");
  table->add_flag("--json", table_json, "Emit a JSON document");

  int depth = 4;
  auto* verify = app.add_subcommand("verify", "Run the identity suites");
  verify->add_option("--depth", depth, "Size bound for the suites")
      ->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*report) return run_report(file, report_json);
    if (*table) return run_table(table_name, check, table_json);
    return run_verify(depth);
  } catch (const detloci::GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kGuardViolation;
  } catch (const detloci::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const detloci::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
}
