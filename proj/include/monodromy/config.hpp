#pragma once

#include <cstdint>

namespace monodromy {

// Defaults from config/defaults.json, fixed at build time.
std::uint64_t default_seed();
std::uint64_t default_instance_seed();
int default_property_cases();

}  // namespace monodromy
