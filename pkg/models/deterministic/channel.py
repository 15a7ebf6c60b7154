# models/deterministic/channel.py
# -----------------------------------------------------------------------------
# Z-IC linear determinístico com cooperação unidirecional (tx2 -> tx1)
#
# Modelo:
#   y1 = D^{q-m} x1  XOR  D^{q-n} x2        (comprimento q = max(m, n))
#   y2 = D^{q-m} x2, só os m níveis de baixo
# Cada vetor de transmissão entra alinhado pelo topo num vetor de q níveis e
# é deslocado para baixo (D = matriz de downshift q x q). Níveis numerados de
# baixo para cima a partir de 1.
#
# Duas representações:
# - BitVec (tupla de 0/1, índice 0 = nível 1) para a API "humana";
# - palavras inteiras (nível i <-> bit i-1) para a enumeração vetorizada em
#   numpy (transmit_words). As duas têm que concordar em toda entrada.
# -----------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

import numpy as np

from common.errors import ParameterError

WEAK_MODERATE = "WeakModerate"
HIGH = "High"
VERY_HIGH = "VeryHigh"


@dataclass(frozen=True)
class DetParams:
    """(m, n, C) em níveis de bit. m = 0 só existe como saída do mapeamento Gaussiano -> determinístico."""

    m: int
    n: int
    c: int = 0

    def __post_init__(self):
        for name in ("m", "n", "c"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise ParameterError(f"{name} must be an integer, got {v!r}", field=name)
            if v < 0:
                raise ParameterError(f"{name} must be ≥ 0", field=name)
            object.__setattr__(self, name, int(v))

    @property
    def q(self) -> int:
        return max(self.m, self.n)

    def check(self) -> "DetParams":
        """Validação das operações do canal: m >= 1 (α indefinido com m = 0)."""
        if self.m < 1:
            raise ParameterError("m must be ≥ 1", field="m")
        return self


@dataclass(frozen=True)
class BitVec:
    levels: Tuple[int, ...]

    def __post_init__(self):
        lv = tuple(int(b) for b in self.levels)
        if any(b not in (0, 1) for b in lv):
            raise ParameterError(f"bits fora de {{0,1}}: {self.levels!r}", field="levels")
        object.__setattr__(self, "levels", lv)

    def __len__(self) -> int:
        return len(self.levels)

    def __getitem__(self, level: int) -> int:
        """Acesso 1-based por nível (1 = base)."""
        if not 1 <= level <= len(self.levels):
            raise IndexError(level)
        return self.levels[level - 1]

    def __xor__(self, other: "BitVec") -> "BitVec":
        if len(other) != len(self):
            raise ParameterError("XOR de vetores com comprimentos diferentes", field="levels")
        return BitVec(tuple(a ^ b for a, b in zip(self.levels, other.levels)))

    @classmethod
    def zeros(cls, length: int) -> "BitVec":
        return cls((0,) * length)

    @classmethod
    def from_int(cls, word: int, length: int) -> "BitVec":
        return cls(tuple((int(word) >> i) & 1 for i in range(length)))

    def to_int(self) -> int:
        return sum(b << i for i, b in enumerate(self.levels))


@dataclass(frozen=True)
class Regime:
    kind: str
    alpha: Union[Fraction, float]


def regime_for_alpha(alpha: Union[Fraction, float]) -> str:
    # α = 2 fica no regime muito alto (o teorema do regime muito alto vale para α >= 2)
    if alpha <= 1:
        return WEAK_MODERATE
    if alpha < 2:
        return HIGH
    return VERY_HIGH


def classify_regime(p: DetParams) -> Regime:
    p.check()
    alpha = Fraction(p.n, p.m)
    return Regime(regime_for_alpha(alpha), alpha)


# ---------------------------- canal (palavras) --------------------------------

# palavras int64: o nível q ocupa o bit q-1 e o bit de sinal fica livre
MAX_WORD_LEVELS = 62


def check_word_levels(p: DetParams) -> DetParams:
    """max(m, n) <= 62 para caber em palavras int64 (field = o maior dos dois)."""
    if p.q > MAX_WORD_LEVELS:
        name = "n" if p.n > p.m else "m"
        raise ParameterError(
            f"{name} must be ≤ {MAX_WORD_LEVELS} for bit-packed words (got max(m, n) = {p.q})", field=name)
    return p


def transmit_words(x1, x2, p: DetParams):
    """
    Versão bit-packed de transmit. Aceita int ou arrays numpy de inteiros
    (arrays só com max(m, n) <= MAX_WORD_LEVELS).
      y1 = x1 ^ (x2 >> (q-n))
      y2 = (x2 >> (q-m)) & (2^m - 1)
    """
    q = p.q
    mask_m = (1 << p.m) - 1
    if isinstance(x1, np.ndarray) or isinstance(x2, np.ndarray):
        check_word_levels(p)
        x1 = np.asarray(x1, dtype=np.int64)
        x2 = np.asarray(x2, dtype=np.int64)
    y1 = x1 ^ (x2 >> (q - p.n))
    y2 = (x2 >> (q - p.m)) & mask_m
    return y1, y2


def transmit(x1: BitVec, x2: BitVec, p: DetParams) -> Tuple[BitVec, BitVec]:
    p.check()
    if len(x1) != p.m:
        raise ParameterError(f"x1 must have length m={p.m}, got {len(x1)}", field="x1")
    if len(x2) != p.q:
        raise ParameterError(f"x2 must have length max(m,n)={p.q}, got {len(x2)}", field="x2")
    y1, y2 = transmit_words(x1.to_int(), x2.to_int(), p)
    return BitVec.from_int(y1, p.q), BitVec.from_int(y2, p.m)
