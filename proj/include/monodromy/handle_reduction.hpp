#pragma once

#include <cstddef>

#include "monodromy/braid.hpp"

namespace monodromy {

// Dehornoy handle reduction. Used only as an independent cross-check of the
// Garside-based word problem; nothing else depends on it.

/// Reduces until no handle remains. Throws Error if max_steps is exceeded.
BraidWord handle_reduce(const BraidWord& w, std::size_t max_steps = 1'000'000);

bool is_trivial_by_handles(const BraidWord& w);
bool words_equal_by_handles(const BraidWord& w1, const BraidWord& w2);

}  // namespace monodromy
