#include <algorithm>
#include <deque>
#include <map>

#include "monodromy/equiv.hpp"
#include "monodromy/garside.hpp"
#include "monodromy/pure.hpp"

namespace monodromy {

namespace {

bool is_odd(const SingClass& c) { return c.bar || c.index % 2 == 1; }
int class_rank(const SingClass& c) { return c.bar ? -1 : c.index; }

std::pair<int, int> pair_of(const Factor& f) { return strand_pair(f.conj); }

// A factorization together with the moves that produced it.
struct Tape {
  Factorization cur;
  MoveCertificate cert;

  void push(Move m) {
    cur = apply_move(cur, m);
    cert.moves.push_back(std::move(m));
  }
  void run(const MoveCertificate& c) {
    for (const auto& m : c.moves) push(m);
  }
  // Factor at `from` travels left to `to` with its value unchanged.
  void pull_left(int from, int to) {
    for (int i = from - 1; i >= to; --i) push(HurwitzR{i});
  }
  // Factor at `from` travels right to `to` with its value unchanged.
  void push_right(int from, int to) {
    for (int i = from; i < to; ++i) push(HurwitzL{i});
  }
  // Factor at `from` travels right to `to`, conjugated by what it crosses.
  void drift_right(int from, int to) {
    for (int i = from; i < to; ++i) push(HurwitzR{i});
  }
};

// Odd classes first (in stable order), then sorted by class among them.
int gather_odd(Tape& t) {
  int odd = 0;
  for (int p = 1; p <= static_cast<int>(t.cur.size()); ++p) {
    if (is_odd(t.cur.factors[p - 1].cls)) {
      t.pull_left(p, odd + 1);
      ++odd;
    }
  }
  for (int pass = 0; pass < odd; ++pass) {
    for (int i = 1; i < odd; ++i) {
      if (class_rank(t.cur.factors[i - 1].cls) > class_rank(t.cur.factors[i].cls)) {
        t.push(HurwitzR{i});
      }
    }
  }
  return odd;
}

// Shortest sequence of available transpositions carrying pair `from` to `to`.
std::optional<std::vector<int>> pair_route(const std::vector<std::pair<int, int>>& transpositions,
                                           std::pair<int, int> from, std::pair<int, int> to) {
  auto apply = [](std::pair<int, int> t, int x) {
    return x == t.first ? t.second : (x == t.second ? t.first : x);
  };
  std::map<std::pair<int, int>, std::pair<std::pair<int, int>, int>> parent;
  std::deque<std::pair<int, int>> queue{from};
  parent[from] = {from, -1};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (int k = 0; k < static_cast<int>(transpositions.size()); ++k) {
      int a = apply(transpositions[k], cur.first), b = apply(transpositions[k], cur.second);
      std::pair<int, int> next{std::min(a, b), std::max(a, b)};
      if (parent.emplace(next, std::make_pair(cur, k)).second) queue.push_back(next);
    }
  }
  if (!parent.count(to)) return std::nullopt;
  std::vector<int> route;
  for (auto p = to; p != from; p = parent[p].first) route.push_back(parent[p].second);
  std::reverse(route.begin(), route.end());
  return route;
}

// Makes the strand pairs of the odd block of t equal to `target`, keeping the
// symmetric image of the even block fixed.
bool align_odd_pairs(Tape& t, int odd, const std::vector<std::pair<int, int>>& target) {
  const int n = static_cast<int>(t.cur.size());
  for (int j = 1; j <= odd; ++j) {
    if (pair_of(t.cur.factors[j - 1]) == target[j - 1]) continue;
    std::vector<std::pair<int, int>> transpositions;
    for (int p = odd + 1; p <= n; ++p) {
      transpositions.push_back(permutation_of(factor_value(t.cur.factors[p - 1])).as_transposition());
    }
    auto route = pair_route(transpositions, pair_of(t.cur.factors[j - 1]), target[j - 1]);
    if (!route) return false;
    t.push_right(j, odd);
    for (int k : *route) {
      const int p = odd + 1 + k;
      t.pull_left(p, odd + 1);
      t.push(HurwitzR{odd});
      t.push(HurwitzR{odd});
      t.push_right(odd + 1, p);
    }
    t.pull_left(odd, j);
    if (pair_of(t.cur.factors[j - 1]) != target[j - 1]) {
      throw Error("internal: odd pair alignment failed");
    }
  }
  return true;
}

MarkedSymFactorization even_image(const Factorization& s, int odd) {
  MarkedSymFactorization all = sym_image(s);
  all.entries.erase(all.entries.begin(), all.entries.begin() + odd);
  return all;
}

}  // namespace

SearchResult rewrite_theorem_main(const Factorization& s1, const Factorization& s2,
                                  const SearchLimits& limits) {
  if (s1.strands != s2.strands) throw PreconditionError("rewrite_theorem_main: strand counts differ");
  const int m = s1.strands;
  if (!(multi_degree(s1) == multi_degree(s2))) {
    throw PreconditionError("rewrite_theorem_main: multi-degrees differ");
  }
  const auto n1 = delta_squared_power(s1);
  const auto n2 = delta_squared_power(s2);
  if (!n1 || !n2 || *n1 != *n2) {
    throw PreconditionError("rewrite_theorem_main: products are not the same power of Delta^2");
  }
  std::size_t full = 1;
  for (int k = 2; k <= m; ++k) full *= static_cast<std::size_t>(k);
  if (generated_sym_subgroup(s1).order() != full || generated_sym_subgroup(s2).order() != full) {
    throw PreconditionError("rewrite_theorem_main: symmetric image is not the full group");
  }

  SearchResult result;
  if (factorizations_equal(s1, s2)) {
    result.verdict = Verdict::Equivalent;
    return result;
  }

  // Odd-class factors to the left, classes in the same order on both sides.
  Tape a{s1, {}}, b{s2, {}};
  const int odd = gather_odd(a);
  gather_odd(b);
  for (int j = 0; j < odd; ++j) {
    if (!(a.cur.factors[j].cls == b.cur.factors[j].cls)) {
      throw Error("internal: odd blocks have different classes");
    }
  }
  std::vector<std::pair<int, int>> target;
  for (int j = 0; j < odd; ++j) target.push_back(pair_of(b.cur.factors[j]));
  if (!align_odd_pairs(a, odd, target)) {
    result.reason = "odd strand pairs could not be aligned";
    return result;
  }

  // Even block: marked symmetric images aligned by a finite search.
  const auto sym = marked_equiv(even_image(a.cur, odd), even_image(b.cur, odd), limits);
  if (!sym.found()) {
    result.reason = "marked symmetric images not aligned: " + sym.reason;
    return result;
  }
  a.run(shifted(sym.certificate, odd));

  // Pure conjugators between matching factors.
  const Factorization& sa = a.cur;
  const Factorization& sb = b.cur;
  const int n = static_cast<int>(sa.size());
  std::vector<std::vector<std::pair<int, int>>> twists(n);
  int total = 0;
  for (int j = 0; j < n; ++j) {
    const int e = sa.factors[j].cls.exponent();
    const auto da = pure_decompose(sa.factors[j].conj, e);
    const auto db = pure_decompose(sb.factors[j].conj, e);
    if (da.k != db.k || da.l != db.l || !(sa.factors[j].cls == sb.factors[j].cls)) {
      throw Error("internal: aligned factors disagree at position " + std::to_string(j + 1));
    }
    BraidWord p = shorter_representative(db.pure * da.pure.inverse());
    twists[j] = positive_conjugator(p).word.letters;
    total += static_cast<int>(twists[j].size());
  }

  // Rewrite the second factorization into the first, then invert.
  const Factorization d = delta_tilde_squared(m);
  const int block = static_cast<int>(d.size());
  const auto pairs = delta_squared_pairs(m);
  Tape c{sb, {}};
  for (int copy = 0, inserted = 0; copy < total; ++copy) {
    for (const auto& f : d.factors) c.push(Insert{n + 1 + inserted++, f.conj});
  }
  std::vector<int> before(n + 1, 0);
  for (int j = 0; j < n; ++j) before[j + 1] = before[j] + static_cast<int>(twists[j].size());
  for (int j = n; j >= 1; --j) c.drift_right(j, j + before[j - 1] * block);
  std::vector<int> base(n + 1);
  for (int j = 1; j <= n; ++j) {
    base[j] = j + before[j - 1] * block;
    const auto& w = twists[j - 1];
    for (int q = 1; q <= static_cast<int>(w.size()); ++q) {
      const int idx = static_cast<int>(std::find(pairs.begin(), pairs.end(), w[q - 1]) - pairs.begin());
      c.pull_left(base[j] + (q - 1) * block + 1 + idx, base[j] + q);
    }
    c.drift_right(base[j], base[j] + static_cast<int>(w.size()));
  }
  for (int j = 1; j <= n; ++j) c.pull_left(base[j] + static_cast<int>(twists[j - 1].size()), j);

  Factorization residue(m);
  residue.factors.assign(c.cur.factors.begin() + n, c.cur.factors.begin() + n + total * block);
  const auto rec = delta_tilde_recognize(residue, limits);
  if (!rec.found()) {
    result.reason = "residue not recognized: " + rec.reason;
    result.states_visited = rec.states_visited;
    return result;
  }
  c.run(shifted(rec.certificate, n));
  for (int k = total * block; k >= 1; --k) c.push(Cancel{n + k});

  MoveCertificate cert = a.cert;
  cert.append(invert_certificate(sb, c.cert));
  cert.append(invert_certificate(s2, b.cert));
  auto check = check_certificate(s1, s2, cert);
  if (!check) throw Error("internal: rewrite produced an invalid certificate: " + check.diagnostic);
  result.verdict = Verdict::Equivalent;
  result.certificate = std::move(cert);
  result.states_visited = rec.states_visited;
  return result;
}

}  // namespace monodromy
