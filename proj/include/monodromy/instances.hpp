#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monodromy/semigroup.hpp"

namespace monodromy {

struct InstancePair {
  std::string name;
  Factorization first;
  Factorization second;
};

/// Seed factorizations of Delta^{2N}: delta_squared(m)^N and variants in
/// which adjacent equal factors were merged into node (A1) or cusp (A2)
/// factors. All have full symmetric image.
std::vector<Factorization> seed_factorizations(int m, int n);

/// Pairs with equal multi-degree, product Delta^{2N} and full symmetric
/// image. Profiles: "conjugate" (s, lambda(g)(s)) and "shuffle" (s, a point
/// of the Hurwitz orbit of s). Deterministic in seed.
std::vector<InstancePair> gen_instances(int m, int n, const std::string& profile,
                                        std::uint64_t seed, int count);

}  // namespace monodromy
