#include "monodromy/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "fixtures_embedded.hpp"
#include "json.hpp"
#include "monodromy/certificate.hpp"
#include "monodromy/config.hpp"
#include "monodromy/document.hpp"
#include "monodromy/garside.hpp"
#include "monodromy/handle_reduction.hpp"
#include "monodromy/pure.hpp"

namespace monodromy {

namespace {

constexpr const char* kClosedForm1 = "c^-1 c^-1 b a c b b a c b b a c b a^-1 c^-1 c^-1 c^-1";
constexpr const char* kClosedForm2 = "b a c b b a c b b a c b a^-1 a^-1 a^-1 c^-1 c^-1 c^-1";
constexpr const char* kGammaS1 = "(1,3)(2,3)(1,4)(2,4)(3,4)(3,4)";
constexpr const char* kGammaS2 = "(2,3)(1,4)(1,4)(2,3)(2,3)(1,4)";

BraidWord word4(const char* text) { return parse_braid_word(text, 4, true); }

std::string gamma_list(const Factorization& s) { return transposition_list(sym_image(s)); }

// Both word-problem oracles must agree before a check relies on them.
bool equal_checked(const BraidWord& u, const BraidWord& v, bool& oracles_agree) {
  const bool garside = words_equal(u, v);
  if (garside != words_equal_by_handles(u, v)) oracles_agree = false;
  return garside;
}

CheckResult braid_relations() {
  CheckResult r{1, "braid-relations", true, ""};
  bool agree = true;
  int relations = 0;
  for (int m = 2; m <= 6; ++m) {
    for (int i = 1; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const BraidWord ai = generator(m, i), aj = generator(m, j);
        const bool holds = j == i + 1 ? equal_checked(ai * aj * ai, aj * ai * aj, agree)
                                      : equal_checked(ai * aj, aj * ai, agree);
        if (!holds) r.passed = false;
        if (j == i + 1 && equal_checked(ai * aj, aj * ai, agree)) r.passed = false;
        ++relations;
      }
    }
  }
  r.passed = r.passed && agree;
  r.details = std::to_string(relations) + " relations for m=2..6, adjacent generators do not commute" +
              (agree ? "" : ", oracles disagree");
  return r;
}

CheckResult delta_central() {
  CheckResult r{2, "delta-squared-central", true, ""};
  bool agree = true;
  for (int m = 2; m <= 6; ++m) {
    const BraidWord d2 = garside_delta(m).power(2);
    for (int i = 1; i < m; ++i) {
      const BraidWord a = generator(m, i);
      if (!equal_checked(d2 * a, a * d2, agree)) r.passed = false;
    }
  }
  r.passed = r.passed && agree;
  r.details = "Delta^2 commutes with every generator for m=2..6";
  return r;
}

CheckResult delta_tilde() {
  CheckResult r{3, "delta-tilde-squared", true, ""};
  std::ostringstream d;
  for (int m = 2; m <= 6; ++m) {
    const Factorization dt = delta_tilde_squared(m);
    const bool product = words_equal(alpha(dt), garside_delta(m).power(2));
    bool recursion = true;
    if (m > 2) {
      Factorization twists(m);
      for (int k = 1; k < m; ++k) twists.factors.push_back({SingClass::A(1), band_conjugator(m, k, m)});
      recursion = concat(twists, embed(delta_tilde_squared(m - 1), m)) == dt;
    }
    if (!product || !recursion) r.passed = false;
    d << (m > 2 ? "; " : "") << "m=" << m << " product " << (product ? "ok" : "FAIL")
      << (m > 2 ? std::string(", recursion ") + (recursion ? "ok" : "FAIL") : "");
  }
  r.details = d.str();
  return r;
}

CheckResult bacb_identities() {
  CheckResult r{4, "bacb-identities", true, ""};
  bool agree = true;
  const BraidWord x = word4("b a c b");
  const bool first = equal_checked(word4("c") * x, x * word4("a"), agree);
  const bool second = equal_checked(word4("a") * x, x * word4("c"), agree);
  r.passed = first && second && agree;
  r.details = std::string("c(bacb)=(bacb)a ") + (first ? "holds" : "FAILS") + ", a(bacb)=(bacb)c " +
              (second ? "holds" : "FAILS");
  return r;
}

CheckResult alpha_equal(const Factorization& s1, const Factorization& s2) {
  CheckResult r{5, "alpha-equal", false, ""};
  const BraidWord a1 = alpha(s1), a2 = alpha(s2);
  const bool same = words_equal(a1, a2);
  const bool c1 = words_equal(a1, word4(kClosedForm1));
  const bool c2 = words_equal(a2, word4(kClosedForm2));
  const bool cross = words_equal(word4(kClosedForm1), word4(kClosedForm2));
  r.passed = same && c1 && c2 && cross;
  r.details = std::string("alpha(s1) ") + (same ? "=" : "!=") + " alpha(s2); alpha(s1) " +
              (c1 ? "=" : "!=") + " c^-2(bacb)^3a^-1c^-3; alpha(s2) " + (c2 ? "=" : "!=") +
              " (bacb)^3a^-3c^-3; normal form " + normal_form(a1).to_string();
  return r;
}

CheckResult gamma_lists(const Factorization& s1, const Factorization& s2) {
  CheckResult r{6, "gamma-lists", false, ""};
  const std::string g1 = gamma_list(s1), g2 = gamma_list(s2);
  r.passed = g1 == kGammaS1 && g2 == kGammaS2;
  r.details = "s1: " + g1 + ", s2: " + g2;
  return r;
}

CheckResult subgroup_orders(const Factorization& s1, const Factorization& s2) {
  CheckResult r{7, "subgroup-orders", false, ""};
  const std::size_t o1 = generated_sym_subgroup(s1).order();
  const std::size_t o2 = generated_sym_subgroup(s2).order();
  r.passed = o1 == 24 && o2 == 4;
  r.details = "orders " + std::to_string(o1) + " vs " + std::to_string(o2) +
              (o1 != o2 ? ", so s1 and s2 are not Hurwitz equivalent" : "");
  return r;
}

CheckResult hurwitz_element_conjugation() {
  CheckResult r{8, "hurwitz-element-conjugation", true, ""};
  int cases = 0, replayed = 0;
  for (int m = 2; m <= 4; ++m) {
    for (int g = 0; g <= 2; ++g) {
      const MarkedSymFactorization h = hurwitz_element(m, g);
      for (int i = 1; i < m; ++i) {
        ++cases;
        const auto conj = lambda_conjugate(h, Permutation::transposition(m, i, i + 1));
        const SearchResult found = marked_equiv(conj, h);
        if (found.found() && apply_sym_moves(conj, found.certificate) == h) ++replayed;
      }
    }
  }
  r.passed = replayed == cases;
  r.details = std::to_string(replayed) + "/" + std::to_string(cases) +
              " conjugates of h_g (m<=4, g<=2) reduced to h_g, certificates replayed";
  return r;
}

CheckResult marked_orbit_census() {
  CheckResult r{9, "marked-orbit-census", true, ""};
  std::ostringstream d;
  bool first = true;
  for (int m = 3; m <= 4; ++m) {
    for (int g = 0;; ++g) {
      const MarkedSymFactorization h = hurwitz_element(m, g);
      if (h.size() > 8) break;
      const TwoMarkCensus c = two_mark_census(h, 10'000'000);
      const std::size_t want = h.size() + 1;
      if (c.components != want) r.passed = false;
      d << (first ? "" : "; ") << "m=" << m << " g=" << g << " length " << h.size() << ": "
        << c.components << " orbits for " << want << " mark multisets";
      first = false;
    }
  }
  r.details = d.str();
  return r;
}

Factorization random_factorization(int m, std::mt19937_64& rng) {
  static const SingClass classes[] = {SingClass::A(0), SingClass::A(1), SingClass::A(2),
                                      SingClass::Abar1()};
  Factorization s(m);
  const int len = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < len; ++k) {
    std::vector<int> letters(rng() % 5);
    for (int& x : letters) {
      x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 1));
      if (rng() & 1) x = -x;
    }
    s.factors.push_back({classes[rng() % 4], BraidWord(m, letters)});
  }
  return s;
}

CheckResult commutation_by_l_moves(const VerifyOptions& options) {
  CheckResult r{10, "commutation-by-l-moves", true, ""};
  std::mt19937_64 rng(options.seed == 0 ? default_seed() : options.seed);
  int ok = 0;
  for (int k = 0; k < options.random_pairs; ++k) {
    const int m = 3 + static_cast<int>(rng() % 2);
    const Factorization s = random_factorization(m, rng);
    const Factorization t = random_factorization(m, rng);
    const MoveCertificate moves = cl1_moves(s.size(), t.size());
    const bool l_only = std::all_of(moves.moves.begin(), moves.moves.end(),
                                    [](const Move& mv) { return std::holds_alternative<HurwitzL>(mv); });
    const Factorization expect = concat(simultaneous_conjugate(t, alpha(s)), s);
    if (l_only && check_certificate(concat(s, t), expect, moves)) ++ok;
  }
  r.passed = ok == options.random_pairs;
  r.details = std::to_string(ok) + "/" + std::to_string(options.random_pairs) +
              " random pairs: s.t becomes lambda(alpha(s))(t).s by L-moves";
  return r;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "check " << c.id << " " << c.name << ": " << (c.passed ? "pass" : "fail") << " ("
        << c.details << ")\n";
  }
  out << "overall: " << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json out;
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    out["checks"].push_back({{"id", c.id},
                             {"name", c.name},
                             {"status", c.passed ? "pass" : "fail"},
                             {"details", c.details}});
  }
  out["status"] = passed() ? "pass" : "fail";
  return out.dump(indent);
}

Factorization fixture_s1() { return parse_factorization_document(kFixtureS1).value; }
Factorization fixture_s2() { return parse_factorization_document(kFixtureS2).value; }

VerificationReport verify_paper(const Factorization& s1, const Factorization& s2,
                                const VerifyOptions& options) {
  const std::vector<std::function<CheckResult()>> checks = {
      braid_relations,
      delta_central,
      delta_tilde,
      bacb_identities,
      [&] { return alpha_equal(s1, s2); },
      [&] { return gamma_lists(s1, s2); },
      [&] { return subgroup_orders(s1, s2); },
      hurwitz_element_conjugation,
      marked_orbit_census,
      [&] { return commutation_by_l_moves(options); },
  };
  static const char* const names[] = {"braid-relations",
                                      "delta-squared-central",
                                      "delta-tilde-squared",
                                      "bacb-identities",
                                      "alpha-equal",
                                      "gamma-lists",
                                      "subgroup-orders",
                                      "hurwitz-element-conjugation",
                                      "marked-orbit-census",
                                      "commutation-by-l-moves"};
  VerificationReport report;
  for (int id = 1; id <= static_cast<int>(checks.size()); ++id) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
      continue;
    }
    try {
      report.checks.push_back(checks[id - 1]());
    } catch (const std::exception& e) {
      report.checks.push_back({id, names[id - 1], false, std::string("error: ") + e.what()});
    }
  }
  return report;
}

VerificationReport verify_paper(const VerifyOptions& options) {
  return verify_paper(fixture_s1(), fixture_s2(), options);
}

}  // namespace monodromy
