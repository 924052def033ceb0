// Acceptance runner: one line per criterion, nonzero exit on any FAIL.
// The full JSON report (with reproducers) is written next to the binary
// unless --report says otherwise.

#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "gammapath/suite.hpp"

int main(int argc, char** argv) {
  gammapath::suite::SuiteConfig cfg;
  std::string report_path = "acceptance_report.json";
  CLI::App app{"gammapath acceptance checks"};
  app.add_option("--seed", cfg.seed)->capture_default_str();
  app.add_option("--budget", cfg.budget_seconds)->capture_default_str();
  app.add_option("--threads", cfg.threads);
  app.add_option("--criteria", cfg.criteria)->delimiter(',');
  app.add_option("--report", report_path)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::vector<gammapath::suite::CriterionResult> results;
  const auto report = gammapath::suite::run_suite(cfg, &results);
  bool failed = false;
  for (const auto& r : results) {
    failed = failed || r.verdict == gammapath::suite::Verdict::kFail;
    std::cout << std::left << std::setw(5) << gammapath::suite::to_string(r.verdict) << " criterion " << r.id << ": "
              << r.title << " | " << r.reason << " | " << std::fixed << std::setprecision(3) << r.seconds << " s";
    if (r.time_limit_seconds > 0) std::cout << " (limit " << std::setprecision(0) << r.time_limit_seconds << " s)";
    std::cout << '\n';
    if (r.verdict == gammapath::suite::Verdict::kFail) {
      for (const auto& rep : r.reproducers) std::cout << "      reproducer: " << rep.value("reason", std::string()) << '\n';
    }
  }
  std::cout << "overall: " << report["verdict"].get<std::string>() << " (seed " << cfg.seed << ")\n";
  std::ofstream(report_path) << report.dump(2) << '\n';
  return failed ? 1 : 0;
}
