#include <algorithm>
#include <numeric>

#include "monodromy/detail/bidirectional_search.hpp"
#include "monodromy/equiv.hpp"
#include "monodromy/garside.hpp"

namespace monodromy {

namespace {

std::size_t conj_length(const Factorization& s) {
  std::size_t n = 0;
  for (const auto& f : s.factors) n += f.conj.size();
  return n;
}

SearchLimits sym_limits(const SearchLimits& limits) {
  SearchLimits l = limits;
  l.max_depth = 64;
  l.max_states = std::min<std::size_t>(limits.max_states, 200'000);
  return l;
}

// Certificates leaving a search are always replayed first.
SearchResult verified(SearchResult r, const Factorization& s1, const Factorization& s2) {
  if (r.verdict != Verdict::Equivalent) return r;
  auto check = check_certificate(s1, s2, r.certificate);
  if (!check) throw Error("internal: search produced an invalid certificate: " + check.diagnostic);
  return r;
}

void check_same_m(const Factorization& s1, const Factorization& s2) {
  if (s1.strands != s2.strands) throw PreconditionError("strand counts differ");
}

}  // namespace

std::optional<std::string> weak_invariant_difference(const Factorization& s1,
                                                     const Factorization& s2) {
  if (!words_equal(alpha(s1), alpha(s2))) return "products differ in Br_m";
  if (c_multi_degree(s1) != c_multi_degree(s2)) return "c-multi-degrees differ";
  return std::nullopt;
}

std::optional<std::string> hurwitz_invariant_difference(const Factorization& s1,
                                                        const Factorization& s2) {
  if (s1.size() != s2.size()) return "lengths differ";
  if (!words_equal(alpha(s1), alpha(s2))) return "products differ in Br_m";
  if (!(multi_degree(s1) == multi_degree(s2))) return "multi-degrees differ";
  const SymSubgroup g1 = generated_sym_subgroup(s1);
  const SymSubgroup g2 = generated_sym_subgroup(s2);
  if (g1.order() != g2.order()) {
    return "generated subgroup orders " + std::to_string(g1.order()) + " vs " +
           std::to_string(g2.order());
  }
  if (!(g1 == g2)) return "generated subgroups differ";
  // The marked symmetric image lives in a finite orbit, so exhausting it is
  // a proof.
  const auto m1 = sym_image(s1);
  const auto m2 = sym_image(s2);
  const auto r = marked_equiv(m1, m2, sym_limits({}));
  if (r.verdict == Verdict::Inequivalent) return "marked symmetric images are not Hurwitz equivalent";
  return std::nullopt;
}

SearchResult bfs_hurwitz_equiv(const Factorization& s1, const Factorization& s2,
                               const SearchLimits& limits) {
  check_same_m(s1, s2);
  if (s1.size() != s2.size()) throw PreconditionError("bfs_hurwitz_equiv: lengths differ");
  if (auto why = hurwitz_invariant_difference(s1, s2)) {
    SearchResult r;
    r.verdict = Verdict::Inequivalent;
    r.reason = *why;
    return r;
  }
  detail::HurwitzSearchSpace<Factorization> space{
      factorization_key, [](const Factorization& s) { return static_cast<int>(s.size()); },
      [&limits](const Factorization& s, int i, Direction d) -> std::optional<Factorization> {
        Factorization t = hurwitz_move(s, i, d);
        if (conj_length(t) > limits.max_word_length) return std::nullopt;
        return t;
      }};
  return verified(detail::bidirectional_hurwitz_search(space, s1, s2, limits), s1, s2);
}

SearchResult bfs_weak_equiv(const Factorization& s1, const Factorization& s2,
                            const SearchLimits& limits) {
  check_same_m(s1, s2);
  if (auto why = weak_invariant_difference(s1, s2)) {
    SearchResult r;
    r.verdict = Verdict::Inequivalent;
    r.reason = *why;
    return r;
  }
  // Both frontiers use Hurwitz moves and cancellations; a cancellation on the
  // target side becomes an insertion in the certificate.
  detail::SearchSpace<Factorization> space;
  space.key = factorization_key;
  space.expand = [&limits](const Factorization& s, std::vector<detail::Edge<Factorization>>& out) {
    const int n = static_cast<int>(s.size());
    for (int i = 1; i < n; ++i) {
      for (Direction d : {Direction::R, Direction::L}) {
        Factorization t = hurwitz_move(s, i, d);
        if (conj_length(t) <= limits.max_word_length) out.push_back({std::move(t), hurwitz(i, d)});
      }
      const Factor& x = s.factors[i - 1];
      const Factor& y = s.factors[i];
      if (x.cls.index == 1 && y.cls.index == 1 && x.cls.bar != y.cls.bar) {
        try {
          out.push_back({cancel_pair(s, i), Cancel{i}});
        } catch (const PreconditionError&) {
        }
      }
    }
    return false;  // insertions are never enumerated, so exhaustion proves nothing
  };
  space.reverse = [](const Factorization& parent, const Move& m) -> std::vector<Move> {
    if (auto* c = std::get_if<Cancel>(&m)) {
      const Factor& x = parent.factors[c->i - 1];
      if (!x.cls.bar) return {Insert{c->i, x.conj}};
      return {Insert{c->i, parent.factors[c->i].conj}, HurwitzR{c->i}};
    }
    return detail::reverse_hurwitz(m);
  };
  space.symmetric = false;
  SearchResult r = detail::bidirectional_search(space, s1, s2, limits);
  if (r.verdict == Verdict::Inequivalent) {
    r.verdict = Verdict::Inconclusive;
    r.reason = "search space exhausted without insertions";
  }
  return verified(std::move(r), s1, s2);
}

std::optional<int> delta_squared_power(const Factorization& s) {
  const int m = s.strands;
  const BraidWord a = alpha(s);
  long sum = 0;
  for (int x : a.letters()) sum += x > 0 ? 1 : -1;
  const long per = static_cast<long>(m) * (m - 1);
  if (sum % per != 0) return std::nullopt;
  const int n = static_cast<int>(sum / per);
  const GarsideNF nf = normal_form(a);
  if (nf.delta_power == 2 * n && nf.simple_factors.empty()) return n;
  return std::nullopt;
}

}  // namespace monodromy
