# tests/test_channel.py
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from common.errors import ParameterError
from models.deterministic.channel import (
    BitVec, DetParams, HIGH, VERY_HIGH, WEAK_MODERATE,
    classify_regime, transmit, transmit_words,
)


def _downshift(q: int, k: int) -> np.ndarray:
    # índice 0 = nível 1 (base); D desloca cada nível uma posição para baixo
    d = np.eye(q, k=1, dtype=int)
    return np.linalg.matrix_power(d, k)


def _matrix_oracle(x1, x2, p: DetParams):
    """Avaliação direta: embute alinhado pelo topo e aplica D^{q-m}, D^{q-n}."""
    q = p.q
    x1q = np.concatenate([np.zeros(q - p.m, dtype=int), np.asarray(x1, dtype=int)])
    x2q = np.asarray(x2, dtype=int)
    y1 = (_downshift(q, q - p.m) @ x1q + _downshift(q, q - p.n) @ x2q) % 2
    y2 = (_downshift(q, q - p.m) @ x2q)[: p.m]
    return tuple(int(b) for b in y1), tuple(int(b) for b in y2)


SMALL = [(m, n) for m in range(1, 5) for n in range(0, 5)]


@pytest.mark.parametrize("m,n", SMALL)
def test_transmit_matches_matrix_oracle(m, n):
    p = DetParams(m, n)
    for x1 in product((0, 1), repeat=m):
        for x2 in product((0, 1), repeat=p.q):
            y1, y2 = transmit(BitVec(x1), BitVec(x2), p)
            assert (y1.levels, y2.levels) == _matrix_oracle(x1, x2, p)


def test_transmit_moderate_example():
    p = DetParams(5, 3, 0)
    b = (1, 0, 1, 1, 0)  # b1..b5 de baixo para cima
    y1, y2 = transmit(BitVec.zeros(5), BitVec(b), p)
    assert y1.levels == (b[2], b[3], b[4], 0, 0)
    assert y2.levels == b


def test_transmit_high_example():
    p = DetParams(4, 5, 0)
    b = (1, 1, 0, 1, 0)
    y1, y2 = transmit(BitVec.zeros(4), BitVec(b), p)
    assert y1.levels == b
    assert y2.levels == b[1:]   # nível de baixo b1 não chega ao rx2


def test_transmit_no_interference():
    p = DetParams(3, 0, 0)
    x1, x2 = BitVec((1, 0, 1)), BitVec((0, 1, 1))
    y1, y2 = transmit(x1, x2, p)
    assert y1 == x1 and y2 == x2


def test_level_rules_high_regime():
    # n > m: y1[i] = x1[i] ^ x2[i] até m, y1[i] = x2[i] acima
    p = DetParams(2, 4)
    for x1 in product((0, 1), repeat=2):
        for x2 in product((0, 1), repeat=4):
            y1, y2 = transmit(BitVec(x1), BitVec(x2), p)
            for i in (1, 2):
                assert y1[i] == x1[i - 1] ^ x2[i - 1]
            for i in (3, 4):
                assert y1[i] == x2[i - 1]
            assert y2.levels == x2[2:]


@pytest.mark.parametrize("m,n", SMALL)
def test_xor_linearity(m, n):
    p = DetParams(m, n)
    words1 = range(1 << m)
    words2 = range(1 << p.q)
    for a1, a2, b1, b2 in product(words1, words2, words1, words2):
        ya = transmit_words(a1, a2, p)
        yb = transmit_words(b1, b2, p)
        yab = transmit_words(a1 ^ b1, a2 ^ b2, p)
        assert yab == (ya[0] ^ yb[0], ya[1] ^ yb[1])


@pytest.mark.parametrize("m,n", SMALL)
def test_receiver2_ignores_x1(m, n):
    p = DetParams(m, n)
    x2 = np.arange(1 << p.q)
    _, ref = transmit_words(np.zeros_like(x2), x2, p)
    for x1 in range(1 << m):
        _, y2 = transmit_words(np.full_like(x2, x1), x2, p)
        assert np.array_equal(y2, ref)


def test_bottom_levels_of_x2_never_reach_rx1():
    p = DetParams(6, 2)
    for x2 in range(1 << 6):
        base = transmit_words(0, x2, p)[0]
        for lv in range(1, p.m - p.n + 1):
            assert transmit_words(0, x2 ^ (1 << (lv - 1)), p)[0] == base


def test_words_agree_with_bitvec_vectorised():
    p = DetParams(4, 3)
    x1 = np.arange(16).repeat(16)
    x2 = np.tile(np.arange(16), 16)
    y1, y2 = transmit_words(x1, x2, p)
    for a, b, r1, r2 in zip(x1[::7], x2[::7], y1[::7], y2[::7]):
        v1, v2 = transmit(BitVec.from_int(a, 4), BitVec.from_int(b, 4), p)
        assert v1.to_int() == r1 and v2.to_int() == r2


def test_transmit_length_mismatch():
    p = DetParams(5, 3)
    with pytest.raises(ParameterError) as e:
        transmit(BitVec.zeros(4), BitVec.zeros(5), p)
    assert e.value.field == "x1"
    with pytest.raises(ParameterError) as e:
        transmit(BitVec.zeros(5), BitVec.zeros(3), p)
    assert e.value.field == "x2"


@pytest.mark.parametrize("m,n,kind,alpha", [
    (5, 3, WEAK_MODERATE, Fraction(3, 5)),
    (4, 5, HIGH, Fraction(5, 4)),
    (2, 4, VERY_HIGH, Fraction(2)),
    (3, 3, WEAK_MODERATE, Fraction(1)),
    (3, 0, WEAK_MODERATE, Fraction(0)),
])
def test_classify_regime(m, n, kind, alpha):
    reg = classify_regime(DetParams(m, n))
    assert reg.kind == kind
    assert reg.alpha == alpha
    assert isinstance(reg.alpha, Fraction)


def test_params_validation():
    with pytest.raises(ParameterError) as e:
        classify_regime(DetParams(0, 3))
    assert e.value.field == "m"
    assert "m must be ≥ 1" in str(e.value)
    with pytest.raises(ParameterError):
        DetParams(3, -1)
    with pytest.raises(ParameterError):
        DetParams(3, 1, -2)
    with pytest.raises(ParameterError):
        DetParams(3.5, 1)
    with pytest.raises(ParameterError):
        BitVec((0, 2, 1))
