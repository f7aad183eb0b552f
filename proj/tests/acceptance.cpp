// One pass/fail line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "monodromy/certificate.hpp"
#include "monodromy/config.hpp"
#include "monodromy/equiv.hpp"
#include "monodromy/instances.hpp"
#include "monodromy/verify.hpp"
#include "properties.hpp"

using namespace monodromy;

namespace {

struct Outcome {
  bool passed = false;
  std::string details;
};

struct Criterion {
  int id;
  const char* name;
  double seconds;  // time bound
  std::function<Outcome()> run;
};

Outcome report_checks(std::vector<int> ids) {
  VerifyOptions options;
  options.only = std::move(ids);
  const VerificationReport r = verify_paper(options);
  std::string details;
  for (const auto& c : r.checks) {
    details += (details.empty() ? "" : "; ") + c.name + ": " + c.details;
  }
  return {r.passed() && !r.checks.empty(), details};
}

Outcome conjugated_delta_search() {
  std::mt19937_64 rng(default_seed());
  const Factorization d = delta_tilde_squared(3);
  SearchLimits limits;
  limits.max_depth = 16;
  int ok = 0;
  std::size_t worst = 0;
  for (int k = 0; k < 20; ++k) {
    std::vector<int> letters(1 + rng() % 4);
    for (int& x : letters) x = (1 + static_cast<int>(rng() % 2)) * ((rng() & 1) ? 1 : -1);
    const Factorization s = simultaneous_conjugate(d, BraidWord(3, letters));
    const SearchResult r = bfs_hurwitz_equiv(s, d, limits);
    if (r.found() && check_certificate(s, d, r.certificate)) ++ok;
    worst = std::max(worst, r.states_visited);
  }
  return {ok == 20, std::to_string(ok) + "/20 conjugates returned, at most " +
                        std::to_string(worst) + " states"};
}

Outcome rewrite_instances() {
  int ok = 0, total = 0;
  std::size_t moves = 0;
  for (const char* profile : {"conjugate", "shuffle"}) {
    for (const auto& p : gen_instances(3, 1, profile, default_instance_seed(), 10)) {
      ++total;
      const SearchResult r = rewrite_theorem_main(p.first, p.second);
      const MoveCounts c = count_moves(r.certificate);
      if (r.found() && check_certificate(p.first, p.second, r.certificate) && c.insert == c.cancel) {
        ++ok;
      }
      moves += r.certificate.size();
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " pairs with balanced certificates, " + std::to_string(moves) +
                           " moves in total"};
}

Outcome property_suites() {
  bool all = true;
  std::string details;
  for (const auto& name : testing::property_names()) {
    const auto o = testing::run_property(name, default_property_cases(), default_seed());
    all = all && o.failures == 0 && o.cases >= 10000;
    details += (details.empty() ? "" : ", ") + name + " " + std::to_string(o.cases - o.failures) +
               "/" + std::to_string(o.cases);
    if (o.failures) details += " [" + o.first_failure + "]";
  }
  return {all, details};
}

Outcome fixture_mutations() {
  const Factorization s1 = fixture_s1(), s2 = fixture_s2();
  VerifyOptions options;
  options.only = {5, 6, 7};  // the checks that read s1
  int mutants = 0, caught = 0;
  for (std::size_t f = 0; f < s1.size(); ++f) {
    const auto& letters = s1.factors[f].conj.letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      for (int replacement : {-3, -2, -1, 1, 2, 3}) {
        if (replacement == letters[k]) continue;
        std::vector<int> changed = letters;
        changed[k] = replacement;
        Factorization mutant = s1;
        mutant.factors[f].conj = BraidWord(4, changed);
        ++mutants;
        if (!verify_paper(mutant, s2, options).passed()) ++caught;
      }
    }
  }
  return {mutants > 0 && caught == mutants,
          std::to_string(caught) + "/" + std::to_string(mutants) + " single-letter mutants detected"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "counterexample", 1.0, [] { return report_checks({5, 6, 7}); }},
      {2, "bacb-identities", 0.1, [] { return report_checks({4}); }},
      {3, "delta-tilde-squared", 5.0, [] { return report_checks({3}); }},
      {4, "delta-squared-central", 1.0, [] { return report_checks({2}); }},
      {5, "hurwitz-element-conjugation", 30.0, [] { return report_checks({8}); }},
      {6, "marked-orbit-census", 60.0, [] { return report_checks({9}); }},
      {7, "conjugated-delta-search", 120.0, conjugated_delta_search},
      {8, "rewrite-pipeline", 600.0, rewrite_instances},
      {9, "property-suites", 1e9, property_suites},
      {10, "fixture-mutations", 1e9, fixture_mutations},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = t <= c.seconds;
    const bool pass = o.passed && in_time;
    all = all && pass;
    std::printf("criterion %d %s: %s (%s; %.3f s%s)\n", c.id, c.name, pass ? "pass" : "fail",
                o.details.c_str(), t, in_time ? "" : ", over time bound");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
