#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "monodromy/certificate.hpp"
#include "monodromy/config.hpp"
#include "monodromy/document.hpp"
#include "monodromy/equiv.hpp"
#include "monodromy/garside.hpp"
#include "monodromy/handle_reduction.hpp"
#include "monodromy/instances.hpp"
#include "monodromy/pure.hpp"
#include "monodromy/verify.hpp"

using namespace monodromy;

namespace {

BraidWord w(int m, std::initializer_list<int> letters) { return BraidWord(m, letters); }

Factorization delta3_conjugated() { return simultaneous_conjugate(delta_tilde_squared(3), generator(3, 1)); }

}  // namespace

TEST_SUITE("braid_core") {
  TEST_CASE("words are freely reduced and invert letter by letter") {
    CHECK(w(3, {1, -1, 2}).letters() == std::vector<int>{2});
    CHECK(w(4, {1, 2, -3}).inverse().letters() == std::vector<int>{3, -2, -1});
    CHECK_THROWS_AS(w(3, {3}), PreconditionError);
  }

  TEST_CASE("rightmost letter acts first in the permutation") {
    // a1 a2: apply (2,3) then (1,2), so 3 -> 2 -> 1.
    const Permutation p = permutation_of(w(3, {1, 2}));
    CHECK(p(3) == 1);
    CHECK(p(1) == 2);
    CHECK(p(2) == 3);
    CHECK(permutation_of(w(4, {1, 1})).is_identity());
  }

  TEST_CASE("letter parsing and printing") {
    CHECK(parse_braid_word("bacb", 4, true).letters() == std::vector<int>{2, 1, 3, 2});
    CHECK(parse_braid_word("c^-2 a", 4, true).letters() == std::vector<int>{-3, -3, 1});
    CHECK(parse_braid_word("m=3 1 -2", 0, false).strands() == 3);
    CHECK_THROWS_AS(parse_braid_word("a", 4, false), ParseError);
    CHECK_THROWS_AS(parse_braid_word("1 2", 0, false), ParseError);
    CHECK(format_letters(w(4, {2, -3})) == "b c^-1");
  }

  TEST_CASE("band generators are conjugates of a1 by band conjugators") {
    for (int m = 2; m <= 6; ++m) {
      for (int k = 1; k < m; ++k) {
        for (int l = k + 1; l <= m; ++l) {
          const BraidWord q = band_conjugator(m, k, l);
          CHECK(words_equal(q * generator(m, 1) * q.inverse(), band_generator(m, k, l)));
          CHECK(permutation_of(band_generator(m, k, l)) == Permutation::transposition(m, k, l));
        }
      }
    }
  }
}

TEST_SUITE("word_problem") {
  TEST_CASE("normal form of Delta powers") {
    for (int m = 2; m <= 6; ++m) {
      const GarsideNF nf = normal_form(garside_delta(m).power(2));
      CHECK(nf.delta_power == 2);
      CHECK(nf.simple_factors.empty());
      CHECK(normal_form(garside_delta(m).inverse()).delta_power == -1);
    }
  }

  TEST_CASE("Garside and handle reduction agree on known relations") {
    const BraidWord lhs = w(4, {1, 2, 1, 3});
    const BraidWord rhs = w(4, {2, 1, 2, 3});
    CHECK(words_equal(lhs, rhs));
    CHECK(words_equal_by_handles(lhs, rhs));
    CHECK_FALSE(words_equal(w(3, {1, 2}), w(3, {2, 1})));
    CHECK_FALSE(words_equal_by_handles(w(3, {1, 2}), w(3, {2, 1})));
    CHECK(is_trivial(w(4, {1, 3, -1, -3})));
    CHECK(is_trivial_by_handles(w(4, {1, 3, -1, -3})));
  }

  TEST_CASE("normal form words represent the input") {
    const BraidWord x = w(4, {1, -2, 3, 3, -1, 2, -3, 1});
    CHECK(words_equal_by_handles(normal_form(x).to_word(), x));
    CHECK(words_equal_by_handles(shorter_representative(x), x));
  }
}

TEST_SUITE("pure_braids") {
  TEST_CASE("combing reproduces the pure braid") {
    const BraidWord p = w(4, {1, 1, 2, -3, -3, -2, 2, 2});
    REQUIRE(is_pure(p));
    CHECK(words_equal(twist_word_value(4, comb_pure(p)), p));
    CHECK_THROWS_AS(comb_pure(w(3, {1})), PreconditionError);
  }

  TEST_CASE("delta squared is the ordered product of full twists") {
    for (int m = 2; m <= 5; ++m) {
      PositiveTwistWord t{m, delta_squared_pairs(m)};
      CHECK(words_equal(twist_word_value(t), garside_delta(m).power(2)));
    }
  }
}

TEST_SUITE("sym_core") {
  TEST_CASE("closure orders") {
    std::vector<Permutation> gens;
    for (int i = 1; i < 4; ++i) gens.push_back(Permutation::transposition(4, i, i + 1));
    CHECK(closure(4, gens).order() == 24);
    CHECK(closure(4, {Permutation::transposition(4, 1, 2), Permutation::transposition(4, 3, 4)}).order() == 4);
    CHECK(closure(4, {}).order() == 1);
  }

  TEST_CASE("Hurwitz element shape and product") {
    const auto h = hurwitz_element(3, 1);
    CHECK(h.size() == 6);
    CHECK(h.product().is_identity());
    CHECK(transposition_list(h) == "(1,2)(1,2)(1,2)(1,2)(2,3)(2,3)");
  }

  TEST_CASE("symmetric moves preserve the product and invert each other") {
    const auto f = make_marked(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    for (int i = 1; i < 4; ++i) {
      const auto g = sym_hurwitz_move(f, i, Direction::R);
      CHECK(g.product() == f.product());
      CHECK(sym_hurwitz_move(g, i, Direction::L) == f);
    }
  }

  TEST_CASE("marked equivalence finds replayable certificates and proves separation") {
    const auto h = hurwitz_element(3, 0);
    const auto c = lambda_conjugate(h, Permutation::transposition(3, 1, 2));
    const auto r = marked_equiv(c, h);
    REQUIRE(r.found());
    CHECK(apply_sym_moves(c, r.certificate) == h);

    // Different identity-mark multisets are never equivalent.
    MarkedSymFactorization a = make_marked(3, {{1, 2}, {1, 2}});
    MarkedSymFactorization b = a;
    a.entries.push_back({Permutation(3), 0});
    b.entries.push_back({Permutation(3), 2});
    CHECK(marked_equiv(a, b).verdict == Verdict::Inequivalent);
  }

  TEST_CASE("two-mark census of a small Hurwitz element") {
    const auto c = two_mark_census(hurwitz_element(3, 0), 1'000'000);
    CHECK(c.components == 5);
    CHECK(c.marked_states == c.orbit_size * 16);
  }
}

TEST_SUITE("fact_semigroup") {
  TEST_CASE("factor values and classes") {
    const Factor f{SingClass::A(2), w(3, {2})};
    CHECK(words_equal(factor_value(f, 3), w(3, {2, 1, 1, 1, -2})));
    CHECK(SingClass::parse("Abar1").exponent() == -2);
    CHECK(SingClass::parse("A3").tag() == "A3");
    CHECK_THROWS_AS(SingClass::parse("B1"), ParseError);
  }

  TEST_CASE("Hurwitz moves keep the product") {
    const Factorization s(3, {{SingClass::A(0), w(3, {2})}, {SingClass::A(1), w(3, {-1, 2})},
                              {SingClass::Abar1(), w(3, {})}});
    for (int i = 1; i <= 2; ++i) {
      CHECK(words_equal(alpha(hurwitz_R(s, i)), alpha(s)));
      CHECK(words_equal(alpha(hurwitz_L(s, i)), alpha(s)));
    }
    CHECK_THROWS_AS(hurwitz_R(s, 3), PreconditionError);
  }

  TEST_CASE("multi-degree and c-multi-degree") {
    const Factorization s(3, {{SingClass::A(0), w(3, {})}, {SingClass::A(1), w(3, {})},
                              {SingClass::Abar1(), w(3, {2})}, {SingClass::A(2), w(3, {})}});
    const MultiDegree d = multi_degree(s);
    CHECK(d.d_bar1 == 1);
    CHECK(d.count(0) == 1);
    CHECK(d.count(1) == 1);
    CHECK(c_multi_degree(s) == std::vector<int>{1, 0, 1});
  }

  TEST_CASE("node pairs insert and cancel") {
    const Factorization s = delta_tilde_squared(3);
    const Factorization t = insert_pair(s, 2, w(3, {1, 2}));
    CHECK(t.size() == 5);
    CHECK(words_equal(alpha(t), alpha(s)));
    CHECK(factorizations_equal(cancel_pair(t, 2), s));
    CHECK_THROWS_AS(cancel_pair(s, 1), PreconditionError);
  }

  TEST_CASE("delta factorizations") {
    for (int m = 2; m <= 5; ++m) {
      CHECK(words_equal(alpha(delta_squared(m)), garside_delta(m).power(2)));
      CHECK(words_equal(alpha(delta_tilde_squared(m)), garside_delta(m).power(2)));
      CHECK(is_trivial(alpha(concat(delta_tilde_squared(m), delta_tilde_inv_squared(m)))));
      CHECK(generated_sym_subgroup(delta_squared(m)).order() > 1);
    }
  }

  TEST_CASE("compact keeps values") {
    const Factorization s = simultaneous_conjugate(delta_tilde_squared(4), w(4, {1, 2, 3, -1, -1}));
    CHECK(factorizations_equal(compact(s), s));
  }
}

TEST_SUITE("certificates") {
  TEST_CASE("replay, inversion and step reporting") {
    const Factorization s = delta3_conjugated();
    const Factorization t = delta_tilde_squared(3);
    const MoveCertificate cert{{HurwitzL{1}}};
    CHECK(check_certificate(s, t, cert).ok);
    CHECK_FALSE(check_certificate(t, s, cert).ok);
    CHECK(check_certificate(t, s, invert_certificate(s, cert)).ok);

    const MoveCertificate bad{{HurwitzR{1}, HurwitzR{7}}};
    const auto check = check_certificate(s, t, bad);
    CHECK_FALSE(check.ok);
    CHECK(check.diagnostic.find("step 2") != std::string::npos);
  }

  TEST_CASE("cancel inverts to insertion") {
    const Factorization s = insert_pair(delta_tilde_squared(3), 4, w(3, {2}));
    const MoveCertificate cert{{HurwitzR{4}, Cancel{4}}};
    const Factorization t = apply_certificate(s, cert);
    CHECK(t.size() == 3);
    const MoveCertificate back = invert_certificate(s, cert);
    CHECK(check_certificate(t, s, back).ok);
    CHECK(count_moves(back).insert == 1);
  }
}

TEST_SUITE("equiv_engine") {
  TEST_CASE("Hurwitz search recovers a conjugated delta") {
    const auto r = bfs_hurwitz_equiv(delta3_conjugated(), delta_tilde_squared(3));
    REQUIRE(r.found());
    CHECK(check_certificate(delta3_conjugated(), delta_tilde_squared(3), r.certificate).ok);
  }

  TEST_CASE("invariants prove inequivalence") {
    const auto r = bfs_hurwitz_equiv(fixture_s1(), fixture_s2());
    CHECK(r.verdict == Verdict::Inequivalent);
    CHECK(r.reason.find("subgroup") != std::string::npos);
  }

  TEST_CASE("exhausted limits are inconclusive") {
    SearchLimits limits;
    limits.max_depth = 1;
    limits.max_states = 4;
    const Factorization s = simultaneous_conjugate(delta_tilde_squared(3), w(3, {1, 2, 1, -2}));
    const auto r = bfs_hurwitz_equiv(s, delta_tilde_squared(3), limits);
    CHECK(r.verdict == Verdict::Inconclusive);
  }

  TEST_CASE("weak equivalence cancels a node pair") {
    const Factorization pair(3, {{SingClass::A(1), w(3, {2})}, {SingClass::Abar1(), w(3, {2})}});
    const auto r = bfs_weak_equiv(pair, Factorization(3));
    REQUIRE(r.found());
    CHECK(count_moves(r.certificate).cancel == 1);
    const auto back = bfs_weak_equiv(Factorization(3), pair);
    REQUIRE(back.found());
    CHECK(count_moves(back.certificate).insert == 1);
  }

  TEST_CASE("generator paths undo conjugation by generators") {
    for (int m = 2; m <= 4; ++m) {
      const Factorization d = delta_tilde_squared(m);
      for (int j = 1; j < m; ++j) {
        for (int sign : {1, -1}) {
          const Factorization s = simultaneous_conjugate(d, generator(m, j, sign));
          CHECK(check_certificate(s, d, generator_path(m, j, sign)).ok);
        }
      }
    }
  }

  TEST_CASE("recognition of delta-tilde powers") {
    const Factorization d = delta_tilde_squared(3);
    CHECK(delta_tilde_recognize(d).certificate.empty());
    const auto r = delta_tilde_recognize(delta3_conjugated());
    REQUIRE(r.found());
    CHECK_FALSE(r.certificate.empty());

    // Two strands: every A1 factor is a1^2.
    const Factorization d2 = power(delta_tilde_squared(2), 2);
    const auto r2 = delta_tilde_recognize(hurwitz_R(d2, 1));
    CHECK(r2.found());

    // Shuffled copies on three strands go through the vector reduction.
    Factorization shuffled = power(d, 3);
    for (int i : {2, 5, 3, 7, 1, 4}) shuffled = hurwitz_L(shuffled, i);
    const auto r3 = delta_tilde_recognize(shuffled);
    REQUIRE(r3.found());
    CHECK(check_certificate(shuffled, power(d, 3), r3.certificate).ok);

    CHECK_THROWS_AS(delta_tilde_recognize(delta_squared(3)), PreconditionError);
  }

  TEST_CASE("rewrite pipeline balances insertions and cancellations") {
    const auto pairs = gen_instances(3, 1, "conjugate", default_instance_seed(), 3);
    for (const auto& p : pairs) {
      const auto r = rewrite_theorem_main(p.first, p.second);
      REQUIRE(r.found());
      CHECK(check_certificate(p.first, p.second, r.certificate).ok);
      const MoveCounts c = count_moves(r.certificate);
      CHECK(c.insert == c.cancel);
    }
    CHECK_THROWS_AS(rewrite_theorem_main(fixture_s1(), fixture_s2()), PreconditionError);
  }
}

TEST_SUITE("cli_verify") {
  TEST_CASE("factorization documents round-trip") {
    const FactorizationDocument doc{"sample", delta3_conjugated()};
    CHECK(parse_factorization_document(to_json(doc)) == doc);
    CHECK(parse_factorization_document(to_json(doc, 2)) == doc);
    const FactorizationDocument empty{"", Factorization(5)};
    CHECK(parse_factorization_document(to_json(empty)) == empty);
  }

  TEST_CASE("malformed documents are parse errors") {
    CHECK_THROWS_AS(parse_factorization_document("{"), ParseError);
    CHECK_THROWS_AS(parse_factorization_document(R"({"schema_version":"2","m":3,"factors":[]})"), ParseError);
    CHECK_THROWS_AS(parse_factorization_document(R"({"schema_version":"1","m":3})"), ParseError);
    CHECK_THROWS_AS(
        parse_factorization_document(R"({"schema_version":"1","m":3,"factors":[{"class":"A1","conj":[3]}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_factorization_document(R"({"schema_version":"1","m":3,"factors":[{"class":"Q","conj":[]}]})"),
        ParseError);
  }

  TEST_CASE("certificates round-trip") {
    const MoveCertificate cert{{HurwitzR{2}, HurwitzL{1}, Conj{w(3, {1, -2})}, Insert{3, w(3, {2})},
                                Cancel{3}}};
    CHECK(parse_certificate(certificate_to_json(cert), 3) == cert);
    CHECK_THROWS_AS(parse_certificate(R"([{"op":"X","i":1}])", 3), ParseError);
    CHECK_THROWS_AS(parse_certificate(R"([{"op":"R","i":0}])", 3), ParseError);
  }

  TEST_CASE("instance lists round-trip and are deterministic") {
    const auto a = gen_instances(3, 1, "shuffle", 7, 4);
    const auto b = gen_instances(3, 1, "shuffle", 7, 4);
    CHECK(instances_to_json(a) == instances_to_json(b));
    const auto back = parse_instances(instances_to_json(a));
    REQUIRE(back.size() == a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(back[k].first == a[k].first);
      CHECK(back[k].second == a[k].second);
    }
    CHECK_THROWS_AS(gen_instances(3, 1, "other", 7, 1), PreconditionError);
  }

  TEST_CASE("generated pairs satisfy the rewrite preconditions") {
    for (const char* profile : {"conjugate", "shuffle"}) {
      for (const auto& p : gen_instances(3, 1, profile, 11, 6)) {
        CHECK(multi_degree(p.first) == multi_degree(p.second));
        CHECK(delta_squared_power(p.first) == std::optional<int>(1));
        CHECK(delta_squared_power(p.second) == std::optional<int>(1));
        CHECK(generated_sym_subgroup(p.first).order() == 6);
      }
    }
  }

  TEST_CASE("fixtures and the fast part of the report") {
    CHECK(fixture_s1().size() == 6);
    CHECK(fixture_s2().size() == 6);
    VerifyOptions options;
    options.only = {1, 2, 3, 4, 5, 6, 7, 10};
    const auto first = verify_paper(options);
    const auto second = verify_paper(options);
    CHECK(first.passed());
    CHECK(first.to_text() == second.to_text());
    CHECK(first.to_json() == second.to_json());
  }
}
