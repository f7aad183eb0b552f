#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "monodromy/braid.hpp"

namespace monodromy {

// Positions are 1-based: a move at i acts on the adjacent pair (i, i+1).

enum class Direction : std::uint8_t { R, L };

/// (x_i, x_{i+1}) -> (x_{i+1}, x_{i+1}^{-1} x_i x_{i+1})
struct HurwitzR {
  int i = 1;
  friend bool operator==(const HurwitzR&, const HurwitzR&) = default;
};
/// (x_i, x_{i+1}) -> (x_i x_{i+1} x_i^{-1}, x_i)
struct HurwitzL {
  int i = 1;
  friend bool operator==(const HurwitzL&, const HurwitzL&) = default;
};
/// Simultaneous conjugation by g.
struct Conj {
  BraidWord g;
  friend bool operator==(const Conj&, const Conj&) = default;
};
/// Inserts the node pair q a_1^2 q^-1, q a_1^-2 q^-1 at positions i, i+1.
struct Insert {
  int i = 1;
  BraidWord g;  // conjugator q of the A1 factor
  friend bool operator==(const Insert&, const Insert&) = default;
};
/// Removes the mutually inverse node pair at positions i, i+1.
struct Cancel {
  int i = 1;
  friend bool operator==(const Cancel&, const Cancel&) = default;
};

using Move = std::variant<HurwitzR, HurwitzL, Conj, Insert, Cancel>;

inline Move hurwitz(int i, Direction d) {
  if (d == Direction::R) return HurwitzR{i};
  return HurwitzL{i};
}

struct MoveCertificate {
  std::vector<Move> moves;
  std::size_t size() const { return moves.size(); }
  bool empty() const { return moves.empty(); }
  void append(const MoveCertificate& other) {
    moves.insert(moves.end(), other.moves.begin(), other.moves.end());
  }
  friend bool operator==(const MoveCertificate&, const MoveCertificate&) = default;
};

std::string describe(const Move& m);

/// Outcome of an equivalence query. Inconclusive is never a verdict.
enum class Verdict : std::uint8_t { Equivalent, Inequivalent, Inconclusive };

std::string to_string(Verdict v);

struct SearchLimits {
  int max_depth = 24;
  std::size_t max_states = 2'000'000;
  std::size_t max_word_length = 4096;
  int jobs = 1;
};

struct SearchResult {
  Verdict verdict = Verdict::Inconclusive;
  MoveCertificate certificate;  // meaningful when Equivalent
  std::string reason;
  std::size_t states_visited = 0;

  bool found() const { return verdict == Verdict::Equivalent; }
};

}  // namespace monodromy
