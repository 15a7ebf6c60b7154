"""
common/info/measures.py
-----------------------
Medidas de informação exatas sobre tabelas finitas de probabilidade.

- Probabilidades são Fraction do começo ao fim (floats de entrada viram
  Fraction pela representação decimal: 0.4 -> 2/5).
- Zeros são detectados simbolicamente: I = 0 quando p(x,y) = p(x)p(y) em
  todas as células; H = 0 quando um átomo tem probabilidade 1.
- Se todos os log2 do somatório forem inteiros (razões diádicas, o caso
  dos esquemas determinísticos com bits uniformes), o resultado sai como
  Fraction exata; caso contrário, float.
- Para enumerações grandes (esquemas), CountTable faz o mesmo com contagens
  int64 em numpy; o zero continua exato (produtos inteiros).
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, Iterable, Mapping, Sequence, Tuple, Union

import numpy as np

from common.errors import DistributionError

Bits = Union[Fraction, float]
Prob = Union[Fraction, int, float, str]


def as_fraction(x: Prob) -> Fraction:
    if isinstance(x, float):
        if not math.isfinite(x):
            raise DistributionError(f"probabilidade não finita: {x!r}")
        return Fraction(repr(x))
    return Fraction(x)


def _log2(r: Fraction) -> Union[int, float]:
    """log2 exato (int) quando numerador e denominador são potências de 2."""
    num, den = r.numerator, r.denominator
    if num & (num - 1) == 0 and den & (den - 1) == 0:
        return num.bit_length() - den.bit_length()
    return math.log2(num) - math.log2(den)


def _accumulate(terms: Iterable[Tuple[Fraction, Union[int, float]]]) -> Bits:
    """Σ p * log2(·): Fraction se todos os logs forem inteiros, senão float."""
    exact = Fraction(0)
    approx = 0.0
    all_exact = True
    for p, lg in terms:
        if isinstance(lg, int):
            exact += p * lg
        else:
            all_exact = False
            approx += float(p) * lg
    if all_exact:
        return exact
    return float(exact) + approx


@dataclass(frozen=True)
class JointDist:
    """Tabela conjunta {(x, y): p}. Células ausentes têm probabilidade 0."""

    table: Mapping[Tuple[Hashable, Hashable], Fraction]

    def __post_init__(self):
        tab: Dict[Tuple[Hashable, Hashable], Fraction] = {}
        for k, v in dict(self.table).items():
            p = as_fraction(v)
            if p < 0:
                raise DistributionError(f"probabilidade negativa em {k!r}: {p}")
            if p:
                tab[k] = tab.get(k, Fraction(0)) + p
        total = sum(tab.values(), Fraction(0))
        if total != 1:
            raise DistributionError(f"probabilidades somam {total}, não 1")
        object.__setattr__(self, "table", tab)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Prob]]) -> "JointDist":
        return cls({(i, j): p for i, row in enumerate(rows) for j, p in enumerate(row)})

    @classmethod
    def from_counts(cls, counts: Mapping[Tuple[Hashable, Hashable], int]) -> "JointDist":
        """Contagens inteiras -> probabilidades exatas count/total."""
        total = sum(counts.values())
        if total <= 0:
            raise DistributionError("contagens vazias")
        return cls({k: Fraction(int(c), total) for k, c in counts.items()})

    def marginals(self) -> Tuple[Dict[Hashable, Fraction], Dict[Hashable, Fraction]]:
        px: Dict[Hashable, Fraction] = defaultdict(Fraction)
        py: Dict[Hashable, Fraction] = defaultdict(Fraction)
        for (x, y), p in self.table.items():
            px[x] += p
            py[y] += p
        return dict(px), dict(py)

    def transpose(self) -> "JointDist":
        return JointDist({(y, x): p for (x, y), p in self.table.items()})


def _validate_dist(dist: Iterable[Prob]) -> list:
    ps = [as_fraction(p) for p in dist]
    if any(p < 0 for p in ps):
        raise DistributionError("probabilidade negativa")
    total = sum(ps, Fraction(0))
    if total != 1:
        raise DistributionError(f"probabilidades somam {total}, não 1")
    return ps


def entropy(dist: Iterable[Prob]) -> Bits:
    """H = -Σ p log2 p (bits)."""
    ps = [p for p in _validate_dist(dist) if p > 0]
    if any(p == 1 for p in ps):
        return Fraction(0)
    return _accumulate((p, _log2(1 / p)) for p in ps)


def mutual_information(j: JointDist) -> Bits:
    """I(X;Y) = Σ p(x,y) log2[p(x,y) / (p(x)p(y))] (bits)."""
    px, py = j.marginals()
    independent = all(j.table.get((x, y), 0) == px[x] * py[y] for x in px for y in py)
    if independent:
        return Fraction(0)
    value = _accumulate((p, _log2(p / (px[x] * py[y]))) for (x, y), p in j.table.items())
    # arredondamento pode dar -1e-17 em tabelas quase independentes
    if isinstance(value, float) and value < 0:
        return 0.0
    return value


def conditional_entropy(j: JointDist) -> Bits:
    """H(X|Y) = H(X,Y) - H(Y). Zero exato quando cada y determina um único x."""
    seen: Dict[Hashable, Hashable] = {}
    functional = True
    for (x, y) in j.table:
        if seen.setdefault(y, x) != x:
            functional = False
            break
    if functional:
        return Fraction(0)
    _, py = j.marginals()
    return _accumulate((p, _log2(py[y] / p)) for (x, y), p in j.table.items())


# -----------------------------------------------------------------------------
# Contagens inteiras (enumeração uniforme): mesmas medidas, sem Fraction por célula
# -----------------------------------------------------------------------------

# N * c_xy precisa caber em int64
MAX_COUNT_TOTAL = 1 << 31


def _factorize(v: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(valores distintos em ordem, código 0..k-1 de cada amostra, contagem por valor)."""
    if v.min() >= 0 and v.max() < 4 * v.size:
        counts = np.bincount(v)
        values = np.flatnonzero(counts)
        code = np.zeros(counts.size, dtype=np.int64)
        code[values] = np.arange(values.size, dtype=np.int64)
        return values, code[v], counts[values].astype(np.int64)
    values, inverse, counts = np.unique(v, return_inverse=True, return_counts=True)
    return values, inverse.reshape(-1).astype(np.int64), counts.astype(np.int64)


@dataclass(frozen=True)
class CountTable:
    """
    Pares (x, y) equiprováveis resumidos em contagens int64.
    Só as células não nulas são guardadas: ix/iy indexam cx/cy.
    """

    ix: np.ndarray
    iy: np.ndarray
    cxy: np.ndarray
    cx: np.ndarray
    cy: np.ndarray
    total: int

    @classmethod
    def from_samples(cls, x, y) -> "CountTable":
        x = np.asarray(x, dtype=np.int64).reshape(-1)
        y = np.asarray(y, dtype=np.int64).reshape(-1)
        if x.size == 0 or x.size != y.size:
            raise DistributionError(f"amostras vazias ou de tamanhos diferentes ({x.size}, {y.size})")
        if x.size > MAX_COUNT_TOTAL:
            raise DistributionError(f"{x.size} amostras excedem o limite de {MAX_COUNT_TOTAL}")
        _, code_x, cx = _factorize(x)
        _, code_y, cy = _factorize(y)
        ny = cy.size
        cells, _, cxy = _factorize(code_x * ny + code_y)
        return cls(cells // ny, cells % ny, cxy, cx, cy, int(x.size))


def _all_pow2(v: np.ndarray) -> bool:
    return bool(np.all((v & (v - 1)) == 0))


def _weighted_log_ratio(weights: np.ndarray, num: np.ndarray, den: np.ndarray, total: int) -> Bits:
    """Σ (w/total) log2(num/den); Fraction exata se a razão reduzida for potência de 2."""
    g = np.gcd(num, den)
    num, den = num // g, den // g
    if _all_pow2(num) and _all_pow2(den):
        lg = np.log2(num).astype(np.int64) - np.log2(den).astype(np.int64)
        return Fraction(int(np.dot(weights, lg)), total)
    return float(np.dot(weights, np.log2(num) - np.log2(den))) / total


def mutual_information_counts(t: CountTable) -> Bits:
    """I(X;Y) sobre contagens; zero exato quando c_xy N = c_x c_y em todo o suporte."""
    num = t.cxy * t.total
    den = t.cx[t.ix] * t.cy[t.iy]
    if t.cxy.size == t.cx.size * t.cy.size and np.array_equal(num, den):
        return Fraction(0)
    value = _weighted_log_ratio(t.cxy, num, den, t.total)
    if isinstance(value, float) and value < 0:
        return 0.0
    return value


def conditional_entropy_counts(t: CountTable) -> Bits:
    """H(X|Y) sobre contagens; zero exato quando cada y aparece com um único x."""
    if t.cxy.size == t.cy.size:
        return Fraction(0)
    return _weighted_log_ratio(t.cxy, t.cy[t.iy], t.cxy, t.total)
