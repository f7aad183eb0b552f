#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "monodromy/config.hpp"
#include "properties.hpp"

using namespace monodromy;

TEST_CASE("randomized property suites") {
  const int cases = default_property_cases();
  for (const auto& name : testing::property_names()) {
    SUBCASE(name.c_str()) {
      const auto outcome = testing::run_property(name, cases, default_seed());
      INFO(outcome.first_failure);
      CHECK(outcome.cases >= 10000);
      CHECK(outcome.failures == 0);
    }
  }
}
