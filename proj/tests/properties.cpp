#include "properties.hpp"

#include <functional>
#include <map>
#include <random>

#include "monodromy/certificate.hpp"
#include "monodromy/garside.hpp"
#include "monodromy/handle_reduction.hpp"
#include "monodromy/semigroup.hpp"

namespace monodromy::testing {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

BraidWord random_word(int m, int max_len, Rng& rng) {
  std::vector<int> letters(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (int& x : letters) x = uniform(rng, 1, m - 1) * ((rng() & 1) ? 1 : -1);
  return BraidWord(m, letters);
}

Factorization random_factorization(int m, int min_len, int max_len, Rng& rng) {
  static const SingClass classes[] = {SingClass::A(0), SingClass::A(1), SingClass::A(2),
                                      SingClass::Abar1()};
  Factorization s(m);
  const int len = uniform(rng, min_len, max_len);
  for (int k = 0; k < len; ++k) s.factors.push_back({classes[rng() % 4], random_word(m, 4, rng)});
  return s;
}

Direction random_direction(Rng& rng) { return (rng() & 1) ? Direction::R : Direction::L; }

// Returns an empty string on success, otherwise a description of the failure.
using Case = std::function<std::string(Rng&)>;

std::string alpha_invariance(Rng& rng) {
  const Factorization s = random_factorization(uniform(rng, 2, 5), 2, 6, rng);
  const int i = uniform(rng, 1, static_cast<int>(s.size()) - 1);
  const Factorization t = hurwitz_move(s, i, random_direction(rng));
  return words_equal(alpha(s), alpha(t)) ? "" : "product changed: " + to_string(s);
}

std::string move_round_trip(Rng& rng) {
  const Factorization s = random_factorization(uniform(rng, 2, 5), 2, 6, rng);
  const int i = uniform(rng, 1, static_cast<int>(s.size()) - 1);
  if (!factorizations_equal(hurwitz_L(hurwitz_R(s, i), i), s)) return "L(R(s)) != s: " + to_string(s);
  if (!factorizations_equal(hurwitz_R(hurwitz_L(s, i), i), s)) return "R(L(s)) != s: " + to_string(s);
  return "";
}

std::string degree_and_subgroup(Rng& rng) {
  const Factorization s = random_factorization(uniform(rng, 2, 5), 2, 6, rng);
  Factorization t = s;
  for (int k = uniform(rng, 1, 3); k > 0; --k) {
    t = hurwitz_move(t, uniform(rng, 1, static_cast<int>(t.size()) - 1), random_direction(rng));
  }
  if (!(multi_degree(s) == multi_degree(t))) return "multi-degree changed: " + to_string(s);
  if (!(generated_sym_subgroup(s) == generated_sym_subgroup(t))) {
    return "subgroup changed: " + to_string(s);
  }
  return "";
}

std::string c_degree_node_pairs(Rng& rng) {
  const int m = uniform(rng, 2, 5);
  const Factorization s = random_factorization(m, 1, 5, rng);
  const int i = uniform(rng, 1, static_cast<int>(s.size()) + 1);
  const Factorization t = insert_pair(s, i, random_word(m, 4, rng));
  if (c_multi_degree(s) != c_multi_degree(t)) return "insert changed c-multi-degree";
  if (!factorizations_equal(cancel_pair(t, i), s)) return "cancel did not undo insert";
  // The swapped pair is still mutually inverse.
  if (!factorizations_equal(cancel_pair(hurwitz_R(t, i), i), s)) return "swapped pair does not cancel";
  return "";
}

std::string gamma_compatibility(Rng& rng) {
  const Factorization s = random_factorization(uniform(rng, 2, 5), 2, 6, rng);
  const int i = uniform(rng, 1, static_cast<int>(s.size()) - 1);
  const Direction d = random_direction(rng);
  if (!(sym_image(hurwitz_move(s, i, d)) == sym_hurwitz_move(sym_image(s), i, d))) {
    return "symmetric image does not follow the move: " + to_string(s);
  }
  return "";
}

std::string commutation_by_l_moves(Rng& rng) {
  const int m = uniform(rng, 2, 5);
  const Factorization s = random_factorization(m, 1, 4, rng);
  const Factorization t = random_factorization(m, 1, 4, rng);
  const MoveCertificate moves = cl1_moves(s.size(), t.size());
  for (const auto& mv : moves.moves) {
    if (!std::holds_alternative<HurwitzL>(mv)) return "non-L move in realization";
  }
  const auto check = check_certificate(concat(s, t), concat(simultaneous_conjugate(t, alpha(s)), s), moves);
  return check ? "" : "realization failed: " + check.diagnostic;
}

// A relator of Br_m: braid relation, far commutation, or a free pair.
BraidWord random_relator(int m, Rng& rng) {
  const int i = uniform(rng, 1, m - 1);
  const BraidWord a = generator(m, i);
  if (m >= 3 && (rng() % 3) == 0) {
    const int j = i < m - 1 ? i + 1 : i - 1;
    const BraidWord b = generator(m, j);
    return a * b * a * (b * a * b).inverse();
  }
  std::vector<int> far;
  for (int j = 1; j < m; ++j) {
    if (std::abs(j - i) >= 2) far.push_back(j);
  }
  if (!far.empty() && (rng() % 2) == 0) {
    const BraidWord b = generator(m, far[rng() % far.size()]);
    return a * b * a.inverse() * b.inverse();
  }
  return BraidWord(m);
}

std::string word_problem_oracles(Rng& rng) {
  const int m = uniform(rng, 2, 6);
  const BraidWord u = random_word(m, 40, rng);
  BraidWord v;
  bool known_equal = false;
  switch (rng() % 3) {
    case 0: {
      // Insert a conjugated relator: v equals u.
      const std::vector<int>& l = u.letters();
      const std::size_t cut = l.empty() ? 0 : rng() % (l.size() + 1);
      const BraidWord left(m, std::vector<int>(l.begin(), l.begin() + static_cast<long>(cut)));
      const BraidWord right(m, std::vector<int>(l.begin() + static_cast<long>(cut), l.end()));
      const BraidWord c = random_word(m, 4, rng);
      v = left * c * random_relator(m, rng) * c.inverse() * right;
      known_equal = true;
      break;
    }
    case 1: {
      std::vector<int> l = u.letters();
      if (!l.empty()) l[rng() % l.size()] *= -1;
      v = BraidWord(m, l);
      break;
    }
    default:
      v = random_word(m, 40, rng);
  }
  const bool garside = words_equal(u, v);
  const bool handles = words_equal_by_handles(u, v);
  if (garside != handles) return "oracles disagree on " + u.to_string() + " vs " + v.to_string();
  if (known_equal && !garside) return "equal words reported unequal";
  return "";
}

const std::map<std::string, Case>& suites() {
  static const std::map<std::string, Case> all = {
      {"alpha-invariance", alpha_invariance},
      {"move-round-trip", move_round_trip},
      {"degree-and-subgroup-invariance", degree_and_subgroup},
      {"c-degree-under-node-pairs", c_degree_node_pairs},
      {"gamma-compatibility", gamma_compatibility},
      {"commutation-by-l-moves", commutation_by_l_moves},
      {"word-problem-oracles", word_problem_oracles},
  };
  return all;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

PropertyOutcome run_property(const std::string& name, int cases, std::uint64_t seed) {
  const Case& fn = suites().at(name);
  PropertyOutcome out{name, cases, 0, ""};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    std::string failure;
    try {
      failure = fn(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty()) {
      if (out.failures++ == 0) out.first_failure = "case " + std::to_string(k) + ": " + failure;
    }
  }
  return out;
}

}  // namespace monodromy::testing
