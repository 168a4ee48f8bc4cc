#ifndef SL2HOM_SUITE_HPP
#define SL2HOM_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sl2hom {

struct SuiteOptions {
  std::vector<uint32_t> primes = {2, 3, 5};
  long long maxE = 1;        // exponent ceiling for criteria 1-4, 6-8
  long long maxEClassify = 2;  // criterion 5 runs the deeper catalog
  uint64_t seed = 12345;
  uint64_t budget = 1000000;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  size_t checks = 0;                  // individual assertions run
  std::vector<std::string> failures;  // descriptions, empty when passed
  double seconds = 0;
};

// The acceptance battery; one result per criterion, in order 1..8.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt);

}  // namespace sl2hom

#endif
