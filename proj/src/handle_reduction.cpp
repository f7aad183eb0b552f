#include "monodromy/handle_reduction.hpp"

#include <vector>

namespace monodromy {

namespace {

// Finds the handle a_i^e v a_i^{-e} ending leftmost, where every letter of v
// has index > i. Returns {p, q} or {-1, -1}.
std::pair<long, long> leftmost_handle(const std::vector<int>& w, int strands) {
  std::vector<long> last(static_cast<std::size_t>(strands) + 1, -1);
  for (long q = 0; q < static_cast<long>(w.size()); ++q) {
    int x = w[static_cast<std::size_t>(q)];
    int i = std::abs(x);
    long p = last[static_cast<std::size_t>(i)];
    if (p >= 0 && w[static_cast<std::size_t>(p)] == -x) {
      bool clean = true;
      for (int j = 1; j < i && clean; ++j) {
        clean = last[static_cast<std::size_t>(j)] < p;
      }
      if (clean) return {p, q};
    }
    last[static_cast<std::size_t>(i)] = q;
  }
  return {-1, -1};
}

}  // namespace

BraidWord handle_reduce(const BraidWord& w, std::size_t max_steps) {
  std::vector<int> cur(w.letters());
  const int strands = w.strands();
  for (std::size_t step = 0;; ++step) {
    if (step >= max_steps) throw Error("handle reduction step limit exceeded");
    auto [p, q] = leftmost_handle(cur, strands);
    if (p < 0) break;
    const int e = cur[static_cast<std::size_t>(p)] > 0 ? 1 : -1;
    const int i = std::abs(cur[static_cast<std::size_t>(p)]);
    std::vector<int> next;
    next.reserve(cur.size() + 2 * static_cast<std::size_t>(q - p));
    next.insert(next.end(), cur.begin(), cur.begin() + p);
    for (long t = p + 1; t < q; ++t) {
      int x = cur[static_cast<std::size_t>(t)];
      if (std::abs(x) == i + 1) {
        // a_i^e a_{i+1}^d a_i^{-e} = a_{i+1}^{-e} a_i^d a_{i+1}^e
        int d = x > 0 ? 1 : -1;
        next.push_back(-e * (i + 1));
        next.push_back(d * i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(x);
      }
    }
    next.insert(next.end(), cur.begin() + q + 1, cur.end());
    cur = std::move(next);
  }
  return BraidWord(strands, cur);
}

bool is_trivial_by_handles(const BraidWord& w) { return handle_reduce(w).empty(); }

bool words_equal_by_handles(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands()) {
    throw PreconditionError("strand-count mismatch in words_equal_by_handles");
  }
  return is_trivial_by_handles(w1 * w2.inverse());
}

}  // namespace monodromy
