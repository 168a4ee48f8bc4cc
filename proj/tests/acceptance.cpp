// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure.  Same battery as `sl2hom suite`.

#include <cstdio>

#include "sl2hom/suite.hpp"

int main() {
  sl2hom::SuiteOptions opt;
  auto results = sl2hom::run_acceptance(opt);
  bool all = true;
  for (const auto& r : results) {
    std::printf("criterion %d [%s] %s (%zu checks, %.1fs)\n", r.number,
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.checks, r.seconds);
    if (!r.passed) {
      size_t shown = 0;
      for (const auto& f : r.failures) {
        std::printf("    %s\n", f.c_str());
        if (++shown >= 20) {
          std::printf("    ... and %zu more\n", r.failures.size() - shown);
          break;
        }
      }
      all = false;
    }
  }
  return all ? 0 : 1;
}
