#include "monodromy/garside.hpp"

#include <algorithm>

namespace monodromy {

namespace {

// Conjugation by Delta on a simple element: p -> w0 p w0.
Permutation flip(const Permutation& p) {
  const int n = p.degree();
  Permutation r(n);
  for (int i = 0; i < n; ++i) {
    r.set_raw(i, static_cast<std::uint8_t>(n - 1 - p.raw(n - 1 - i)));
  }
  return r;
}

// i (1-based) is a right descent of A: A = A' a_i with A' simple.
bool right_descent(const Permutation& a, int i) { return a.raw(i - 1) > a.raw(i); }

// i is a left descent of B: B = a_i B'.
bool left_descent(const Permutation& b_inverse, int i) {
  return b_inverse.raw(i - 1) > b_inverse.raw(i);
}

// Makes the pair (a, b) left-weighted. Returns true if a changed.
bool left_weight(Permutation& a, Permutation& b) {
  const int n = a.degree();
  bool changed = false;
  Permutation b_inv = b.inverse();
  for (;;) {
    int move = 0;
    for (int i = 1; i < n; ++i) {
      if (left_descent(b_inv, i) && !right_descent(a, i)) {
        move = i;
        break;
      }
    }
    if (move == 0) return changed;
    a = a.times_adjacent(move);
    b = b.adjacent_times(move);
    b_inv = b_inv.times_adjacent(move);
    changed = true;
  }
}

}  // namespace

GarsideNF normal_form(const BraidWord& w) {
  const int n = w.strands();
  const auto& letters = w.letters();
  const Permutation identity(n);
  const Permutation delta = Permutation::reversal(n);

  // w = Delta^{-r} * P with P a product of simple elements; a negative letter
  // a_i^{-1} = Delta^{-1} (Delta a_i^{-1}) and the Delta^{-1} is pushed left
  // through earlier factors, flipping each of them once.
  std::size_t negatives_after = 0;
  for (int x : letters) {
    if (x < 0) ++negatives_after;
  }
  GarsideNF nf;
  nf.strands = n;
  nf.delta_power = -static_cast<int>(negatives_after);

  std::vector<Permutation>& f = nf.simple_factors;
  f.reserve(letters.size());
  for (int x : letters) {
    Permutation s = x > 0 ? identity.times_adjacent(x)
                          : delta.times_adjacent(-x);
    if (x < 0) --negatives_after;
    if (negatives_after % 2 == 1) s = flip(s);

    f.push_back(s);
    // Restore left-weightedness from the right end.
    for (std::size_t k = f.size() - 1; k > 0; --k) {
      if (!left_weight(f[k - 1], f[k])) break;
    }
  }

  // Deltas gather at the front, identities at the back.
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == delta) ++lead;
  nf.delta_power += static_cast<int>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && f.back().is_identity()) f.pop_back();
  return nf;
}

bool words_equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands()) {
    throw PreconditionError("strand-count mismatch in words_equal");
  }
  return normal_form(w1 * w2.inverse()) == GarsideNF{w1.strands(), 0, {}};
}

bool is_trivial(const BraidWord& w) {
  GarsideNF nf = normal_form(w);
  return nf.delta_power == 0 && nf.simple_factors.empty();
}

BraidWord GarsideNF::to_word() const {
  BraidWord out = garside_delta(strands).power(delta_power);
  for (const auto& s : simple_factors) out *= permutation_braid(s);
  return out;
}

std::size_t GarsideNF::word_length() const {
  std::size_t len = static_cast<std::size_t>(std::abs(delta_power)) *
                    static_cast<std::size_t>(strands * (strands - 1) / 2);
  for (const auto& s : simple_factors) len += static_cast<std::size_t>(s.length());
  return len;
}

std::string GarsideNF::key() const {
  std::string k;
  k.reserve(6 + simple_factors.size() * static_cast<std::size_t>(strands));
  k.push_back(static_cast<char>(strands));
  for (int shift = 0; shift < 32; shift += 8) {
    k.push_back(static_cast<char>((static_cast<unsigned>(delta_power) >> shift) & 0xFF));
  }
  for (const auto& s : simple_factors) {
    for (int i = 0; i < strands; ++i) k.push_back(static_cast<char>(s.raw(i)));
  }
  return k;
}

std::string GarsideNF::to_string() const {
  std::string out = "D^" + std::to_string(delta_power);
  for (const auto& s : simple_factors) {
    out += " [" + permutation_braid(s).to_string() + "]";
  }
  return out;
}

BraidWord shorter_representative(const BraidWord& w) {
  GarsideNF nf = normal_form(w);
  if (nf.word_length() < w.size()) return nf.to_word();
  return w;
}

}  // namespace monodromy
