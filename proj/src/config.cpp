#include "monodromy/config.hpp"

#include "fixtures_embedded.hpp"

namespace monodromy {

std::uint64_t default_seed() { return kDefaultSeed; }
std::uint64_t default_instance_seed() { return kInstanceSeed; }
int default_property_cases() { return kPropertyCases; }

}  // namespace monodromy
