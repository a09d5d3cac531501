#pragma once

#include "ga/report.hpp"

namespace ga {

struct SuiteConfig {
  std::string suite = "all";
  Signature signature{1, 3};
  long trials = 100;
  std::uint64_t seed = 1;
  int degree = 3;
};

bool suite_known(const std::string& name);

// Runs one identity suite (or all of them) deterministically from the seed.
Report run_suite(const SuiteConfig& config);

}  // namespace ga
