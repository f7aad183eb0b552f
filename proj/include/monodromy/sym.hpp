#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monodromy/braid.hpp"
#include "monodromy/moves.hpp"

namespace monodromy {

struct MarkedEntry {
  Permutation perm;  // a transposition or the identity
  int mark = 0;
  friend bool operator==(const MarkedEntry&, const MarkedEntry&) = default;
};

/// A sequence of transpositions (and identity letters) of Sigma_m with
/// integer marks recording the singularity type of the factor it came from.
struct MarkedSymFactorization {
  int degree = 2;
  std::vector<MarkedEntry> entries;

  std::size_t size() const { return entries.size(); }
  Permutation product() const;
  std::string to_string() const;  // "(1,3)_0 . (2,3)_0 ..."
  friend bool operator==(const MarkedSymFactorization&,
                         const MarkedSymFactorization&) = default;
};

/// Entries without marks, e.g. "(1,3)(2,3)()"; identity entries print "()".
std::string transposition_list(const MarkedSymFactorization& f);

MarkedSymFactorization make_marked(int degree,
                                   const std::vector<std::pair<int, int>>& transpositions,
                                   int mark = 0);

/// Explicit subgroup of Sigma_m, elements sorted.
struct SymSubgroup {
  int degree = 1;
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
  SymSubgroup conjugated(const Permutation& by) const;
  friend bool operator==(const SymSubgroup&, const SymSubgroup&) = default;
};

inline constexpr std::size_t kDefaultClosureLimit = 4'000'000;

/// Subgroup generated by the given permutations. An empty generator list
/// yields the trivial group of the given degree.
SymSubgroup closure(int degree, const std::vector<Permutation>& generators,
                    std::size_t max_order = kDefaultClosureLimit);

/// Whether some sigma in Sigma_m has sigma H sigma^-1 = K (m <= 8).
bool subgroups_conjugate(const SymSubgroup& h, const SymSubgroup& k);

/// h_g = ((1,2).(1,2))^{g+1} . ((2,3).(2,3)) ... ((m-1,m).(m-1,m)), marks 0.
MarkedSymFactorization hurwitz_element(int degree, int genus);

MarkedSymFactorization sym_hurwitz_move(const MarkedSymFactorization& f, int i,
                                        Direction direction);
MarkedSymFactorization lambda_conjugate(const MarkedSymFactorization& f,
                                        const Permutation& sigma);
MarkedSymFactorization apply_sym_moves(const MarkedSymFactorization& f,
                                       const MoveCertificate& cert);

/// Decides marked Hurwitz equivalence by meet-in-the-middle search over the
/// finite orbit. Throws PreconditionError unless degree, length, product and
/// mark multisets agree. Identity letters keep their marks and take part in
/// the search; their marks are compared separately from transposition marks.
SearchResult marked_equiv(const MarkedSymFactorization& f1,
                          const MarkedSymFactorization& f2,
                          const SearchLimits& limits = {});

/// Size of the Hurwitz orbit of f (complete enumeration, bounded by limit).
/// Returns 0 if the limit is exceeded.
std::size_t hurwitz_orbit_size(const MarkedSymFactorization& f, std::size_t limit);

struct TwoMarkCensus {
  std::size_t orbit_size = 0;     // unmarked Hurwitz orbit of the base
  std::size_t marked_states = 0;  // orbit_size * 2^length
  std::size_t components = 0;     // orbits of the marked action
};

/// Marks every entry with one of two labels in all possible ways and counts
/// the orbits of the marked Hurwitz action on (orbit point, marking) pairs.
/// The number of each label is invariant, so components == length + 1
/// exactly when equal mark multisets always give equivalent factorizations.
TwoMarkCensus two_mark_census(const MarkedSymFactorization& base, std::size_t limit);

}  // namespace monodromy
