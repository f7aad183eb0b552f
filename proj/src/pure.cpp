#include "monodromy/pure.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace monodromy {

BraidWord full_twist(int strands, int k, int l, int sign) {
  return band_generator(strands, k, l).power(2 * sign);
}

BraidWord twist_word_value(int strands, const std::vector<TwistLetter>& letters) {
  BraidWord out(strands);
  for (const auto& t : letters) out *= full_twist(strands, t.k, t.l, t.sign);
  return out;
}

BraidWord twist_word_value(const PositiveTwistWord& w) {
  BraidWord out(w.strands);
  for (auto [k, l] : w.letters) out *= full_twist(w.strands, k, l, 1);
  return out;
}

std::vector<std::pair<int, int>> delta_squared_pairs(int strands) {
  std::vector<std::pair<int, int>> out;
  for (int l = strands; l >= 2; --l) {
    for (int k = 1; k < l; ++k) out.emplace_back(k, l);
  }
  return out;
}

namespace {

using TwistWord = std::vector<TwistLetter>;

void push_twist(TwistWord& w, TwistLetter t) {
  if (!w.empty() && w.back().k == t.k && w.back().l == t.l &&
      w.back().sign == -t.sign) {
    w.pop_back();
  } else {
    w.push_back(t);
  }
}

// a_j A_{k,l}^e a_j^{-1} written in full twists.
void conjugate_letter(int j, TwistLetter t, TwistWord& out) {
  const int k = t.k, l = t.l, e = t.sign;
  if ((k == j && l == j + 1) || (k != j && k != j + 1 && l != j && l != j + 1)) {
    push_twist(out, t);
  } else if (l == j) {
    push_twist(out, {k, j + 1, e});
  } else if (k == j) {
    push_twist(out, {j + 1, l, e});
  } else if (l == j + 1) {
    push_twist(out, {j, j + 1, 1});
    push_twist(out, {k, j, e});
    push_twist(out, {j, j + 1, -1});
  } else {  // k == j + 1
    push_twist(out, {j, j + 1, 1});
    push_twist(out, {j, l, e});
    push_twist(out, {j, j + 1, -1});
  }
}

// T A_{i,i+1}^sign T^{-1} for a positive word T.
TwistWord conjugate_by_positive(const BraidWord& t, int i, int sign) {
  TwistWord cur{{i, i + 1, sign}};
  const auto& letters = t.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    TwistWord next;
    next.reserve(cur.size() + 2);
    for (const auto& x : cur) conjugate_letter(*it, x, next);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::vector<TwistLetter> comb_pure(const BraidWord& w) {
  if (!is_pure(w)) throw PreconditionError("comb_pure: input is not a pure braid");
  const int n = w.strands();
  // Schreier rewriting against the transversal of permutation braids.
  std::map<std::tuple<std::uint64_t, int, int>, TwistWord> cache;
  TwistWord out;
  Permutation coset(n);
  for (int x : w.letters()) {
    const int i = std::abs(x);
    const bool ascent = coset.raw(i - 1) < coset.raw(i);
    Permutation next = coset.times_adjacent(i);
    const Permutation* base = nullptr;
    int sign = 0;
    if (x > 0 && !ascent) {
      base = &next;
      sign = 1;
    } else if (x < 0 && ascent) {
      base = &coset;
      sign = -1;
    }
    if (base) {
      auto key = std::make_tuple(base->code(), i, sign);
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, conjugate_by_positive(permutation_braid(*base), i, sign))
                 .first;
      }
      for (const auto& t : it->second) push_twist(out, t);
    }
    coset = next;
  }
  return out;
}

PositiveConjugator positive_conjugator(const BraidWord& p) {
  const int n = p.strands();
  const auto pairs = delta_squared_pairs(n);
  PositiveConjugator r;
  r.word.strands = n;
  for (const auto& t : comb_pure(p)) {
    if (t.sign > 0) {
      r.word.letters.emplace_back(t.k, t.l);
      continue;
    }
    // Delta^2 = X A Y  =>  Delta^2 = A Y X, so A^{-1} = (Y X) Delta^{-2}.
    auto at = std::find(pairs.begin(), pairs.end(), std::make_pair(t.k, t.l));
    r.word.letters.insert(r.word.letters.end(), at + 1, pairs.end());
    r.word.letters.insert(r.word.letters.end(), pairs.begin(), at);
    ++r.deficit;
  }
  return r;
}

std::pair<int, int> strand_pair(const BraidWord& q) {
  Permutation s = permutation_of(q);
  int a = s(1), b = s(2);
  return {std::min(a, b), std::max(a, b)};
}

PureDecomposition pure_decompose(const BraidWord& q, int exponent) {
  if (exponent == 0) throw PreconditionError("pure_decompose: exponent must be nonzero");
  const int n = q.strands();
  const Permutation sigma = permutation_of(q);
  auto [k, l] = strand_pair(q);
  BraidWord base = band_conjugator(n, k, l);
  // base a_1 base^{-1} = z_{k,l}; fix the permutation defect with a lift of
  // gamma(base)^{-1} sigma, which preserves {1,2} and so commutes with a_1.
  Permutation defect = permutation_of(base).inverse() * sigma;
  if (!((defect(1) == 1 && defect(2) == 2) || (defect(1) == 2 && defect(2) == 1))) {
    throw Error("pure_decompose: internal permutation defect does not fix {1,2}");
  }
  BraidWord lift = permutation_braid(defect);
  return {q * lift.inverse() * base.inverse(), k, l};
}

}  // namespace monodromy
