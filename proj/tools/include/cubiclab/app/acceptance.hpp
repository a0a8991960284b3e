#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cubiclab::app {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  /// Run smoothness of the fixture cubics over ℚ instead of the 𝔽_p filter.
  bool exact_smoothness = false;
};

/// Criteria 1..10.
std::vector<int> criterion_ids();
std::string criterion_title(int id);
/// Wall-clock budget of a criterion in seconds.
double criterion_budget(int id);

/// Runs one criterion; a criterion passes only if its checks hold and it
/// finishes within its budget. Throws std::out_of_range for an unknown id.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(std::span<const int> ids, const AcceptanceOptions& options = {});

}  // namespace cubiclab::app
