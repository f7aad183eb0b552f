#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monodromy/certificate.hpp"
#include "monodromy/moves.hpp"
#include "monodromy/semigroup.hpp"

namespace monodromy {

/// Reason text if some Hurwitz-move invariant (product, multi-degree,
/// generated subgroup, marked symmetric orbit) separates s1 and s2.
std::optional<std::string> hurwitz_invariant_difference(const Factorization& s1,
                                                        const Factorization& s2);
/// Same for the invariants of weak equivalence (product, c-multi-degree).
std::optional<std::string> weak_invariant_difference(const Factorization& s1,
                                                     const Factorization& s2);

/// Meet-in-the-middle search using Hurwitz moves only. Equivalent results
/// carry a certificate that has passed check_certificate.
SearchResult bfs_hurwitz_equiv(const Factorization& s1, const Factorization& s2,
                               const SearchLimits& limits = {});

/// Search using Hurwitz moves and node-pair insertion/cancellation. Never
/// reports Inequivalent unless an invariant differs.
SearchResult bfs_weak_equiv(const Factorization& s1, const Factorization& s2,
                            const SearchLimits& limits = {});

/// Hurwitz moves taking lambda(a_j^sign)(delta_tilde_squared(m)) to
/// delta_tilde_squared(m). Computed once per (m, j), kept in memory and in
/// the directory named by MONODROMY_CACHE_DIR (default ".cache").
MoveCertificate generator_path(int m, int j, int sign);

/// Hurwitz moves taking lambda(h)(delta_tilde_squared(m)) to it.
MoveCertificate conjugated_block_path(int m, const BraidWord& h);

/// Certificate taking s (all factors of class A1, product Delta^{2N}) to the
/// literal factor list of delta_tilde_squared(m)^N. If block_conjugators is
/// given, copy c of s is expected to equal lambda(h_c)(delta_tilde_squared).
SearchResult delta_tilde_recognize(const Factorization& s, const SearchLimits& limits = {},
                                   const std::vector<BraidWord>& block_conjugators = {});

/// Weak-equivalence certificate for two factorizations of Delta^{2N} with
/// equal multi-degree and full symmetric image. Odd classes move left, the
/// marked symmetric images are aligned, inserted copies of Delta~^2 absorb
/// the remaining pure conjugators, and the leftover copies are recognized
/// and cancelled. Throws PreconditionError naming a failed hypothesis.
SearchResult rewrite_theorem_main(const Factorization& s1, const Factorization& s2,
                                  const SearchLimits& limits = {});

/// N with words_equal(alpha(s), Delta^{2N}), if there is one.
std::optional<int> delta_squared_power(const Factorization& s);

}  // namespace monodromy
