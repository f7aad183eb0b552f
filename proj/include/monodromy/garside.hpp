#pragma once

#include <string>
#include <vector>

#include "monodromy/braid.hpp"

namespace monodromy {

/// Left-greedy normal form Delta^p * s_1 * ... * s_r. Each s_i is a simple
/// braid stored by its permutation; no s_i is trivial or equal to Delta and
/// every adjacent pair is left-weighted.
struct GarsideNF {
  int strands = 2;
  int delta_power = 0;
  std::vector<Permutation> simple_factors;

  /// Canonical word: Delta^p followed by reduced words of the simple factors.
  BraidWord to_word() const;
  /// Compact byte string, equal iff the forms are equal.
  std::string key() const;
  std::string to_string() const;
  /// Number of letters in to_word().
  std::size_t word_length() const;

  friend bool operator==(const GarsideNF&, const GarsideNF&) = default;
};

GarsideNF normal_form(const BraidWord& w);
bool words_equal(const BraidWord& w1, const BraidWord& w2);
bool is_trivial(const BraidWord& w);

/// Shortest of the given word and its normal-form rendering.
BraidWord shorter_representative(const BraidWord& w);

}  // namespace monodromy
