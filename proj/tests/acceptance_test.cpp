#include <cstdio>
#include <cstdlib>
#include <string>

#include "cubiclab/app/acceptance.hpp"

int main(int argc, char** argv) {
  cubiclab::app::AcceptanceOptions options;
  if (const char* seed = std::getenv("CUBICLAB_SEED")) options.seed = std::stoull(seed);
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--exact") options.exact_smoothness = true;
  }
  int failures = 0;
  for (int id : cubiclab::app::criterion_ids()) {
    const auto r = cubiclab::app::run_criterion(id, options);
    std::printf("[%s] criterion %d (%s): %s (%.3f s, budget %g s)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.detail.c_str(), r.seconds, r.budget_seconds);
    if (!r.passed) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(cubiclab::app::criterion_ids().size()) - failures,
              cubiclab::app::criterion_ids().size());
  return failures == 0 ? 0 : 1;
}
