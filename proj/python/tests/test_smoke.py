import json

import pytest

import regdissect as rd


def test_upset_operations():
    evens = rd.UltimatelyPeriodicSet.from_progressions([(2, 0, 0)])
    odds = ~evens
    assert 4 in evens and 5 not in evens
    assert 5 in odds
    assert (evens | odds) == rd.UltimatelyPeriodicSet.naturals()
    assert not (evens & odds).is_infinite()
    assert (evens + odds) == odds


def test_semilinear_image():
    s = rd.SemiLinearSet(2, [rd.LinearSet([1, 1], [[1, 1]])])
    assert [3, 3] in s and [3, 2] not in s
    lengths = s.image_under_weights([1, 1]).to_upset()
    assert 2 in lengths and 4 in lengths and 3 not in lengths
    assert rd.parikh_of("abba", "ab") == [2, 2]


def test_dfa_json_round_trip():
    d = rd.length_modulus_dfa(4, 3, "01")
    assert d.num_states == 4
    assert d.accepts("011") and not d.accepts("01")
    assert rd.Dfa.from_json(d.to_json()) == d
    assert rd.dfa_is_empty(rd.dfa_intersection(d, rd.dfa_complement(d)))


def test_grammar_language():
    h = rd.Language.from_grammar("l1", "S -> 0 S 1\nS -> ε\n")
    assert "0011" in h and "0101" not in h
    assert h.enumerate(4) == ["", "01", "0011"]
    assert h.lengths(6) == [0, 2, 4, 6]


def test_dissect_l1():
    cert = rd.verify(rd.Language.corpus("l1"), rd.length_modulus_dfa(4, 0, "01"),
                     max_length=200, threshold=20)
    assert cert["verdict"] == "verified-at-N"
    final = cert["checkpoints"][-1]
    assert (final["inside"], final["outside"]) == (51, 50)


def test_dissect_auto_reports_strategy():
    cert = rd.dissect(rd.Language.builtin("ab_power"), max_length=600, threshold=9)
    assert cert["verdict"] == "verified-at-N"
    assert cert["strategy"] == "symbol-count"


def test_separation():
    cover = rd.Language.corpus("l1")
    inner = rd.Language.corpus("l1_even")
    report = rd.separate(cover, inner, max_length=400, threshold=20)
    assert report["holds"]
    assert report["separation"]["cover_minus_separator"] >= 20
    assert report["separation"]["separator_minus_inner"] >= 20


def test_hierarchy():
    assert rd.level_bound("BCFL_2 - BCFL_1")["level"] == 4
    assert rd.normalize("BCFL_4") == "(BCFL_2 | BCFL_2)"
    assert rd.difference_bound(2, 3) == 8


def test_factorial_decision():
    out = rd.factorial_decision([(2, 0, 0)])
    assert out["inside_cofinite"] and not out["dissects"]


def test_errors_carry_kind():
    with pytest.raises(rd.Error) as info:
        rd.Language.builtin("no_such_language")
    assert info.value.kind == "InvalidArgument"
    with pytest.raises(rd.Error) as info:
        rd.Language.from_grammar("bad", "S -> \n")
    assert info.value.kind == "SyntaxError"


def test_failed_strategy_keeps_certificate():
    cert = rd.dissect(rd.Language.builtin("factorial_unary"), max_length=720, threshold=2)
    assert cert["verdict"] == "failed"
    assert cert["attempts"]

    inner = rd.Language.corpus("unary_4n3")
    cover = inner | rd.Language.builtin("factorial_unary")
    with pytest.raises(rd.Error) as info:
        rd.separate(cover, inner, max_length=720, threshold=5)
    assert info.value.kind == "StrategyFailed"
    assert json.loads(info.value.certificate)["verdict"] == "failed"
