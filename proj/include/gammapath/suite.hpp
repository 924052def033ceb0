#ifndef GAMMAPATH_SUITE_HPP_
#define GAMMAPATH_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gammapath/limits.hpp"

namespace gammapath::suite {

enum class Verdict { kPass, kFail, kSkipped };
std::string to_string(Verdict v);

struct SuiteConfig {
  std::uint64_t seed = 7;
  double budget_seconds = 600.0;
  unsigned threads = 0;  // 0: GAMMAPATH_THREADS, else hardware concurrency
  Limits limits;
  bool best_effort = true;  // attempt the n = 4 gadget runs
  std::vector<int> criteria;  // empty: all
};

struct CriterionResult {
  int id = 0;
  std::string title;
  Verdict verdict = Verdict::kSkipped;
  std::string reason;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double seconds = 0.0;
  double time_limit_seconds = 0.0;  // 0: none
  nlohmann::json details = nlohmann::json::object();
  nlohmann::json reproducers = nlohmann::json::array();
};

inline constexpr int kCriterionCount = 9;

unsigned resolve_threads(unsigned requested);

// Runs one acceptance criterion (1..9). Never throws for instance-level
// problems; those become failures with reproducers.
CriterionResult run_criterion(int id, const SuiteConfig& config);

nlohmann::json criterion_to_json(const CriterionResult& r);

// All selected criteria, with a config echo and the overall verdict.
nlohmann::json run_suite(const SuiteConfig& config, std::vector<CriterionResult>* results = nullptr);

}  // namespace gammapath::suite

#endif  // GAMMAPATH_SUITE_HPP_
