#include "monodromy/instances.hpp"

#include <deque>
#include <optional>
#include <random>
#include <set>

#include "monodromy/garside.hpp"

namespace monodromy {

namespace {

bool full_image(const Factorization& s) {
  std::size_t fact = 1;
  for (int k = 2; k <= s.strands; ++k) fact *= static_cast<std::size_t>(k);
  return generated_sym_subgroup(s).order() == fact;
}

// Replaces `run` adjacent A0 factors with equal value at position i by one
// factor of class A(run - 1).
std::optional<Factorization> merged(const Factorization& s, std::size_t i, int run) {
  if (i + run > s.size()) return std::nullopt;
  const Factor& f = s.factors[i];
  if (!(f.cls == SingClass::A(0))) return std::nullopt;
  for (int r = 1; r < run; ++r) {
    if (!factors_equal(f, s.factors[i + r], s.strands)) return std::nullopt;
  }
  Factorization out = s;
  out.factors.erase(out.factors.begin() + i, out.factors.begin() + i + run);
  out.factors.insert(out.factors.begin() + i, Factor{SingClass::A(run - 1), f.conj});
  return out;
}

// First orbit point (breadth-first, fixed move order) that admits a merge.
std::optional<Factorization> first_merge(const Factorization& start, int run) {
  std::set<std::string> seen{factorization_key(start)};
  std::deque<std::pair<Factorization, int>> queue{{start, 0}};
  while (!queue.empty()) {
    auto [s, depth] = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (auto m = merged(s, i, run); m && full_image(*m)) return compact(*m);
    }
    if (depth >= 4) continue;
    for (int i = 1; i < static_cast<int>(s.size()); ++i) {
      for (Direction d : {Direction::R, Direction::L}) {
        Factorization t = compact(hurwitz_move(s, i, d));
        if (seen.insert(factorization_key(t)).second) queue.emplace_back(std::move(t), depth + 1);
      }
    }
  }
  return std::nullopt;
}

BraidWord random_word(int m, int max_len, std::mt19937_64& rng) {
  const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
  std::vector<int> letters;
  for (int k = 0; k < len; ++k) {
    const int g = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 1));
    letters.push_back((rng() & 1) ? g : -g);
  }
  return BraidWord(m, letters);
}

Factorization random_walk(const Factorization& s, int steps, std::mt19937_64& rng) {
  Factorization cur = s;
  const int n = static_cast<int>(s.size());
  if (n < 2) return cur;
  for (int k = 0; k < steps; ++k) {
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    cur = compact(hurwitz_move(cur, i, (rng() & 1) ? Direction::R : Direction::L));
  }
  return cur;
}

}  // namespace

std::vector<Factorization> seed_factorizations(int m, int n) {
  if (m < 2 || n < 1) throw PreconditionError("seed_factorizations: need m >= 2, N >= 1");
  const Factorization base = power(delta_squared(m), n);
  std::vector<Factorization> seeds{base};
  if (m >= 3) {
    if (auto nodal = first_merge(base, 2)) seeds.push_back(*nodal);
    if (auto cusp = first_merge(base, 3)) seeds.push_back(*cusp);
  }
  return seeds;
}

std::vector<InstancePair> gen_instances(int m, int n, const std::string& profile,
                                        std::uint64_t seed, int count) {
  if (profile != "conjugate" && profile != "shuffle") {
    throw PreconditionError("gen_instances: profile must be 'conjugate' or 'shuffle'");
  }
  if (count < 0) throw PreconditionError("gen_instances: negative count");
  const auto seeds = seed_factorizations(m, n);
  std::mt19937_64 rng(seed);
  std::vector<InstancePair> out;
  for (int k = 0; k < count; ++k) {
    const std::size_t which = static_cast<std::size_t>(k) % seeds.size();
    Factorization s = random_walk(seeds[which], 2, rng);
    Factorization t = profile == "conjugate"
                          ? compact(simultaneous_conjugate(s, random_word(m, 3, rng)))
                          : random_walk(s, 4, rng);
    out.push_back({profile + "-" + std::to_string(k), std::move(s), std::move(t)});
  }
  return out;
}

}  // namespace monodromy
