#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "monodromy/braid.hpp"
#include "monodromy/moves.hpp"
#include "monodromy/sym.hpp"

namespace monodromy {

/// Conjugacy class of a factor: A(i) = conjugates of a_1^{i+1}, Abar1 =
/// conjugates of a_1^{-2}.
struct SingClass {
  bool bar = false;
  int index = 0;  // i for A(i); 1 for Abar1

  static SingClass A(int i);
  static SingClass Abar1();
  /// Accepts "A<i>" and "Abar1".
  static SingClass parse(std::string_view tag);

  int exponent() const { return bar ? -2 : index + 1; }
  std::string tag() const;
  friend bool operator==(const SingClass&, const SingClass&) = default;
  friend auto operator<=>(const SingClass&, const SingClass&) = default;
};

/// q a_1^e q^{-1} with e fixed by the class.
struct Factor {
  SingClass cls;
  BraidWord conj;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Factorization {
  int strands = 2;
  std::vector<Factor> factors;

  Factorization() = default;
  explicit Factorization(int m) : strands(m) {}
  Factorization(int m, std::vector<Factor> fs);

  std::size_t size() const { return factors.size(); }
  bool empty() const { return factors.empty(); }
  /// Literal equality of classes and conjugator words.
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct MultiDegree {
  int d_bar1 = 0;
  std::map<int, int> d;  // i -> number of A(i) factors, zero counts omitted

  int count(int i) const;
  int total() const;
  std::string to_string() const;
  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
};

BraidWord factor_value(const Factor& f, int strands);
BraidWord factor_value(const Factor& f);
BraidWord alpha(const Factorization& s);

Factorization hurwitz_R(const Factorization& s, int i);
Factorization hurwitz_L(const Factorization& s, int i);
Factorization hurwitz_move(const Factorization& s, int i, Direction d);
Factorization simultaneous_conjugate(const Factorization& s, const BraidWord& g);

MultiDegree multi_degree(const Factorization& s);
/// (d_0, d_1 - d_bar1, d_2, ..., d_k), k the largest index present (k >= 1).
std::vector<int> c_multi_degree(const Factorization& s);

/// Marks: i for A(i), 1 for Abar1.
MarkedSymFactorization sym_image(const Factorization& s);
SymSubgroup generated_sym_subgroup(const Factorization& s);

/// Inserts (A1 with conjugator g, Abar1 with conjugator g) at positions i, i+1.
Factorization insert_pair(const Factorization& s, int i, const BraidWord& g);
Factorization cancel_pair(const Factorization& s, int i);

Factorization delta_squared(int m);
Factorization delta_tilde_squared(int m);
Factorization delta_tilde_inv_squared(int m);
/// s concatenated with itself n times.
Factorization power(const Factorization& s, int n);
Factorization concat(const Factorization& s, const Factorization& t);
/// Re-reads a factorization over m >= s.strands strands.
Factorization embed(const Factorization& s, int m);

/// Class tags equal and values equal in Br_m.
bool factors_equal(const Factor& f, const Factor& g, int strands);
bool factorizations_equal(const Factorization& s, const Factorization& t);

/// Replaces each conjugator by a shorter word with the same factor value
/// when one is readily found; values never change.
Factorization compact(const Factorization& s);

/// Moves of the identity s.t = lambda(alpha(s))(t).s, all of them L-moves.
MoveCertificate cl1_moves(std::size_t s_length, std::size_t t_length);

/// Canonical key of the factor list up to equality of values.
std::string factorization_key(const Factorization& s);

std::string to_string(const Factorization& s);

}  // namespace monodromy
