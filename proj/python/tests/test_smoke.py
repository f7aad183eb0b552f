import json
from pathlib import Path

import pytest

import monodromy as md

DATA = Path(__file__).resolve().parents[2] / "tests" / "data"


def test_braid_relation_holds():
    aba = md.BraidWord(3, [1, 2, 1])
    bab = md.BraidWord(3, [2, 1, 2])
    assert md.words_equal(aba, bab)
    assert not md.words_equal(aba, md.BraidWord(3, [1, 2]))


def test_letter_syntax_and_normal_form():
    w = md.parse_word("bacb bacb bacb a^-3 c^-3", 4)
    v = md.parse_word("c^-2 bacb bacb bacb a^-1 c^-3", 4)
    assert md.words_equal(w, v)
    assert md.normal_form(w) == md.normal_form(v)
    assert md.words_equal(md.normal_form_word(w), w)


def test_delta_squared_is_pure_and_central():
    delta2 = md.garside_delta(4).power(2)
    assert md.permutation(delta2) == md.permutation(md.BraidWord(4))
    g = md.BraidWord(4, [1, -3, 2])
    assert md.words_equal(g * delta2, delta2 * g)


def test_factorization_json_round_trip():
    s = md.read_factorization(str(DATA / "delta3.json"))
    again = md.Factorization.from_json(s.to_json())
    assert again == s
    assert json.loads(s.to_json())["schema_version"] == "1"


def test_moves_preserve_product():
    s = md.delta_tilde_squared(3)
    t = md.hurwitz_R(s, 1)
    assert md.words_equal(md.alpha(s), md.alpha(t))
    assert md.factorizations_equal(md.hurwitz_L(t, 1), s)


def test_hurwitz_search_returns_checked_certificate():
    s = md.delta_tilde_squared(3)
    t = md.simultaneous_conjugate(s, md.BraidWord(3, [1, -2]))
    r = md.hurwitz_search(t, s)
    assert r["verdict"] == "equivalent"
    ok, diagnostic = md.check_certificate(t, s, r["certificate"])
    assert ok, diagnostic


def test_weak_equivalence_inserts_a_node_pair():
    empty = md.Factorization(3)
    s = md.insert_pair(empty, 1, md.BraidWord(3, [2]))
    r = md.weak_equiv(empty, s)
    assert r["verdict"] == "equivalent"
    assert r["counts"]["insert"] == 1


def test_rewrite_on_generated_pair():
    name, first, second = md.gen_instances(3, count=1)[0]
    r = md.rewrite_main(first, second)
    assert r["verdict"] == "equivalent", r["reason"]
    assert r["counts"]["insert"] == r["counts"]["cancel"]
    assert md.check_certificate(first, second, r["certificate"])[0]


def test_invariants_agree_on_an_instance_pair():
    first = md.read_factorization(str(DATA / "instance_first.json"))
    second = md.read_factorization(str(DATA / "instance_second.json"))
    a, b = md.invariants(first), md.invariants(second)
    for key in ("multi_degree", "c_multi_degree", "subgroup_order"):
        assert a[key] == b[key]
    assert md.invariants(first)["subgroup_order"] == 6
    assert md.invariants(md.delta_tilde_squared(3))["subgroup_order"] == 1


def test_verification_suite_passes():
    passed, report = md.verify()
    assert passed, report
    assert report.rstrip().endswith("overall: pass")


def test_errors_are_value_errors():
    with pytest.raises(md.ParseError):
        md.Factorization.from_json("{}")
    with pytest.raises(ValueError):
        md.parse_word("1 7", 3)
