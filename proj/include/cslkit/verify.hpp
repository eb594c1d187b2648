#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cslkit {

struct SuiteResult {
  std::string name;
  std::string claim;  // what was checked
  std::int64_t checks = 0;
  std::vector<std::string> failures;  // witnesses
  bool ok() const { return failures.empty(); }
};

/// csl, counts, symmetry, hex, primepower, bravais.
const std::vector<std::string>& suite_names();

/// Runs one oracle cross-check suite over all odd Σ <= max_sigma. Throws for an unknown name.
SuiteResult run_suite(const std::string& name, std::int64_t max_sigma);

}  // namespace cslkit
