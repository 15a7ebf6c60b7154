# tests/test_schemes.py
import time
from fractions import Fraction

import pytest

from common.errors import ParameterError, RegimeError, ResourceError, SchemeParseError
from common.geometry.region import RatePair, contains
from models.deterministic.channel import DetParams
from models.deterministic.regions import det_outer_region
from models.deterministic.schemes import (
    DATA, JAM, TX1, TX2, W1, W2, Assignment, Scheme,
    corner_scheme_a, corner_scheme_b, evaluate_scheme, format_scheme, parse_scheme, without_jam,
)


def _kinds(s, tx, length):
    return [s.at(tx, lv).kind for lv in range(1, length + 1)]


def test_corner_scheme_a_layout():
    s = corner_scheme_a(DetParams(5, 3))
    assert all(s.at(TX1, i) == Assignment.data(W1, i) for i in range(1, 6))
    assert [s.at(TX2, i) for i in (1, 2)] == [Assignment.data(W2, 1), Assignment.data(W2, 2)]
    assert _kinds(s, TX2, 5)[2:] == ["zero"] * 3
    assert s.rates == (5, 2)


def test_corner_scheme_edge_cases():
    assert corner_scheme_a(DetParams(4, 4)).rates == (4, 0)
    assert corner_scheme_a(DetParams(3, 0)).rates == (3, 3)
    b = corner_scheme_b(DetParams(4, 4))
    assert _kinds(b, TX1, 4) == [JAM] * 4
    assert b.rates == (0, 4)
    b = corner_scheme_b(DetParams(2, 1))
    assert b.at(TX1, 1).kind == JAM
    assert b.at(TX1, 2) == Assignment.data(W1, 1)
    assert _kinds(b, TX2, 2) == [DATA, DATA]


def test_corner_scheme_b_layout():
    s = corner_scheme_b(DetParams(5, 3))
    assert _kinds(s, TX1, 5) == [JAM, JAM, JAM, DATA, DATA]
    assert _kinds(s, TX2, 5) == [DATA] * 5
    assert s.rates == (2, 5)


def test_corner_schemes_need_weak_moderate():
    with pytest.raises(RegimeError):
        corner_scheme_a(DetParams(4, 5))
    with pytest.raises(RegimeError):
        corner_scheme_b(DetParams(2, 4))


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 9) for n in range(1, m + 1)])
def test_corner_schemes_secure_and_tight(m, n):
    p = DetParams(m, n)
    outer = det_outer_region(DetParams(m, n, 0))
    for build, rates in ((corner_scheme_a, (m, m - n)), (corner_scheme_b, (m - n, m))):
        rep = evaluate_scheme(build(p))
        assert (rep.r1, rep.r2) == rates
        assert rep.leakage == 0 and isinstance(rep.leakage, Fraction)
        assert rep.secure and rep.decodable1 and rep.decodable2
        assert contains(outer, RatePair(*rates))
        assert sum(rates) == outer.bound("sum")


def test_jamming_is_necessary():
    s = corner_scheme_b(DetParams(5, 3))
    for tx, level in s.jam_levels():
        rep = evaluate_scheme(without_jam(s, tx, level))
        assert isinstance(rep.leakage, Fraction)
        assert rep.leakage >= 1
        assert not rep.secure


def test_unprotected_data_leaks_top_levels():
    p = DetParams(5, 3)
    s = Scheme(p, {}, {i: Assignment.data(W2, i) for i in range(1, 6)})
    rep = evaluate_scheme(s)
    assert rep.leakage == 3
    assert rep.decodable2
    assert rep.r1 == 0 and rep.decodable1


def test_report_dict():
    rep = evaluate_scheme(corner_scheme_b(DetParams(5, 3)))
    assert rep.to_dict() == {"r1": 2, "r2": 5, "leakage_bits": 0.0, "secure": True, "decodable": [True, True]}


def test_enumeration_budget():
    s = corner_scheme_b(DetParams(8, 3))   # 16 bits livres
    with pytest.raises(ResourceError):
        evaluate_scheme(s, max_bits=15)


def test_wide_schemes_use_exact_counts():
    # y1 com mais de 32 níveis: o bit do topo continua decodificável
    for m in (33, 40, 62):
        rep = evaluate_scheme(parse_scheme(f"m={m} n=0\ntx1 {m} data w1 1\n"))
        assert (rep.r1, rep.r2) == (1, 0)
        assert rep.decodable1 and rep.decodable2 and rep.leakage == 0
    rep = evaluate_scheme(parse_scheme("m=33 n=33\ntx2 33 data w2 1\n"))
    assert rep.leakage == 1 and rep.decodable2


@pytest.mark.parametrize("text,field", [("m=64 n=0\ntx1 64 data w1 1\n", "m"), ("m=2 n=63\ntx1 1 data w1 1\n", "n")])
def test_schemes_wider_than_a_word_are_rejected(text, field):
    with pytest.raises(ParameterError) as e:
        evaluate_scheme(parse_scheme(text))
    assert e.value.field == field


def test_full_budget_runs_fast():
    p = DetParams(12, 12)
    s = Scheme(p, {i: Assignment.data(W1, i) for i in range(1, 13)}, {i: Assignment.data(W2, i) for i in range(1, 13)})
    start = time.perf_counter()
    rep = evaluate_scheme(s, max_bits=24)
    assert time.perf_counter() - start < 10.0
    # y1 = w1 xor w2: W2 fica escondido por W1, mas R1 não decodifica
    assert rep.leakage == 0 and rep.secure
    assert rep.decodable2 and not rep.decodable1


def test_scheme_validation():
    p = DetParams(5, 3)
    with pytest.raises(ParameterError):
        Scheme(p, {6: Assignment.jam()}, {})
    with pytest.raises(ParameterError):
        Scheme(p, {1: Assignment.data(W2, 1)}, {})
    with pytest.raises(ParameterError):
        Scheme(p, {1: Assignment.data(W1, 1), 2: Assignment.data(W1, 3)}, {})
    with pytest.raises(ParameterError):
        without_jam(corner_scheme_b(p), TX1, 4)


# ------------------------------- formato texto ---------------------------------

def test_parse_minimal_scheme():
    s = parse_scheme("m=5 n=3\ntx1 4 data w1 1\ntx2 1 data w2 1")
    assert s.rates == (1, 1)
    assert s.at(TX1, 4) == Assignment.data(W1, 1)
    assert s.at(TX1, 1).kind == "zero"


def test_parse_comments_and_blank_lines():
    text = "# esquema de teste\nm=2 n=1   # cabeçalho\n\ntx1 1 jam\ntx1 2 data w1 1\ntx2 1 data w2 1\ntx2 2 data w2 2\n"
    s = parse_scheme(text)
    assert s == corner_scheme_b(DetParams(2, 1))


@pytest.mark.parametrize("text,line", [
    ("m=5 n=3\ntx1 9 jam", 2),
    ("m=5 n=3\ntx3 1 jam", 2),
    ("m=5 n=3\ntx1 1 jam\ntx1 1 zero", 3),
    ("m=5 n=3\ntx1 1 data w1 1\ntx1 2 data w1 3", 3),
    ("m=5 n=3\ntx1 1 data w2 1", 2),
    ("m=5 n=3\ntx1 1 noise", 2),
    ("m=5 n=3\ntx1 1 data w1 1\ntx1 2 data w1 1", 3),
    ("m=5 q=3", 1),
    ("m=0 n=3", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(SchemeParseError) as e:
        parse_scheme(text)
    assert e.value.line == line
    assert str(e.value).startswith(f"line {line}: ")


def test_parse_empty_text():
    with pytest.raises(SchemeParseError):
        parse_scheme("# só comentário\n")


@pytest.mark.parametrize("build", [corner_scheme_a, corner_scheme_b])
def test_format_then_parse_gives_same_scheme(build):
    s = build(DetParams(5, 3))
    assert parse_scheme(format_scheme(s)) == s
