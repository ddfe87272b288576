#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tb {

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few messages only
  bool ok() const { return failed == 0; }
};

const std::vector<std::string>& verify_suite_names();
// Randomized property suite; `trials` <= 0 selects the suite's default size.
// Throws InvalidArgument for an unknown suite name.
SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed, int trials = 0);

}  // namespace tb
