#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monodromy::testing {

struct PropertyOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;  // empty when all cases passed
};

/// Names of the randomized property suites.
std::vector<std::string> property_names();

/// Runs one suite on `cases` seeded random inputs.
PropertyOutcome run_property(const std::string& name, int cases, std::uint64_t seed);

}  // namespace monodromy::testing
