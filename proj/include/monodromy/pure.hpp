#pragma once

#include <utility>
#include <vector>

#include "monodromy/braid.hpp"

namespace monodromy {

/// One letter z_{k,l}^{2*sign} of a word in the full twists.
struct TwistLetter {
  int k = 1;
  int l = 2;
  int sign = 1;
  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// Word in the full twists z_{k,l}^2 with only positive letters.
struct PositiveTwistWord {
  int strands = 2;
  std::vector<std::pair<int, int>> letters;
  friend bool operator==(const PositiveTwistWord&, const PositiveTwistWord&) = default;
};

BraidWord full_twist(int strands, int k, int l, int sign = 1);
BraidWord twist_word_value(int strands, const std::vector<TwistLetter>& letters);
BraidWord twist_word_value(const PositiveTwistWord& w);

/// The pairs (k,l) of z_{k,l}^2 in the order of the product
/// Delta^2 = prod_{l=m..2} prod_{k=1..l-1} z_{k,l}^2.
std::vector<std::pair<int, int>> delta_squared_pairs(int strands);

/// Rewrites a pure braid as a word in the full twists z_{k,l}^{+-2}.
/// Throws PreconditionError on non-pure input.
std::vector<TwistLetter> comb_pure(const BraidWord& w);

struct PositiveConjugator {
  PositiveTwistWord word;
  /// Number of inverse letters replaced; word = p * Delta^{2*deficit}.
  int deficit = 0;
};

/// A positive twist word inducing the same inner automorphism as the pure
/// braid p: each inverse letter is replaced by its positive complement in a
/// cyclic rotation of the full-twist product for Delta^2.
PositiveConjugator positive_conjugator(const BraidWord& p);

struct PureDecomposition {
  BraidWord pure;  // p, with q a_1^e q^-1 = p z_{k,l}^e p^-1
  int k = 1;
  int l = 2;
};

PureDecomposition pure_decompose(const BraidWord& q, int exponent);

/// The unordered strand pair {gamma(q)(1), gamma(q)(2)}, sorted.
std::pair<int, int> strand_pair(const BraidWord& q);

}  // namespace monodromy
