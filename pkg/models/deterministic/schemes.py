# models/deterministic/schemes.py
# -----------------------------------------------------------------------------
# Esquemas alcançáveis do Z-IC determinístico (C = 0) e verificação exata
#
# O que este módulo faz:
# 1) Monta os dois esquemas de canto do regime fraco/moderado:
#       A: tx1 dados em todos os m níveis, tx2 dados em [1 : m-n]   -> (m, m-n)
#       B: tx2 dados em [1 : m], tx1 jamming em [1 : n] e dados no resto -> (m-n, m)
# 2) Lê/escreve esquemas no formato texto por linha (parse_scheme / format_scheme).
# 3) evaluate_scheme: enumera TODAS as atribuições de bits de mensagem e de
#    jamming (uniformes, i.i.d.), passa pelo canal e mede com aritmética exata:
#       vazamento = I(W2; y1), decodificável_i <=> H(Wi | yi) = 0.
#
# Observações:
# - Bloco de comprimento 1 com vazamento exatamente 0 (mais forte que o
#   segredo fraco assintótico).
# - Enumeração vetorizada em numpy sobre palavras bit-packed
#   (models/deterministic/channel.transmit_words).
# -----------------------------------------------------------------------------

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from common.config.settings import SETTINGS
from common.errors import ParameterError, RegimeError, ResourceError, SchemeParseError
from common.info.measures import Bits, CountTable, conditional_entropy_counts, mutual_information_counts
from models.deterministic.channel import DetParams, WEAK_MODERATE, check_word_levels, classify_regime, transmit_words

log = logging.getLogger(__name__)

DATA, JAM, ZERO = "data", "jam", "zero"
W1, W2 = "w1", "w2"
TX1, TX2 = "tx1", "tx2"

# mensagem de cada transmissor
_OWN_MESSAGE = {TX1: W1, TX2: W2}


@dataclass(frozen=True)
class Assignment:
    kind: str
    message: Optional[str] = None
    bit: Optional[int] = None

    @classmethod
    def data(cls, message: str, bit: int) -> "Assignment":
        return cls(DATA, message, bit)

    @classmethod
    def jam(cls) -> "Assignment":
        return cls(JAM)

    @classmethod
    def zero(cls) -> "Assignment":
        return cls(ZERO)


def _check_data_bits(bits: Mapping[str, List[int]]) -> Optional[str]:
    """Índices de cada mensagem devem ser exatamente 1..k. Retorna a descrição do problema (ou None)."""
    for msg, idx in bits.items():
        if len(set(idx)) != len(idx):
            return f"repeated data bit index for {msg}"
        if sorted(idx) != list(range(1, len(idx) + 1)):
            return f"non-contiguous data indices for {msg}: {sorted(idx)}"
    return None


@dataclass(frozen=True)
class Scheme:
    """Atribuição por nível. Níveis não listados são Zero (entradas Zero são descartadas)."""

    params: DetParams
    tx1: Mapping[int, Assignment] = field(default_factory=dict)
    tx2: Mapping[int, Assignment] = field(default_factory=dict)

    def __post_init__(self):
        self.params.check()
        bits: Dict[str, List[int]] = defaultdict(list)
        for tx, length in ((TX1, self.params.m), (TX2, self.params.q)):
            clean = {}
            for level, a in dict(getattr(self, tx)).items():
                if not 1 <= int(level) <= length:
                    raise ParameterError(f"{tx} level {level} out of range 1..{length}", field=tx)
                if a.kind == ZERO:
                    continue
                if a.kind == DATA:
                    if a.message != _OWN_MESSAGE[tx]:
                        raise ParameterError(f"{a.message} data not allowed on {tx}", field=tx)
                    bits[a.message].append(int(a.bit))
                elif a.kind != JAM:
                    raise ParameterError(f"unknown assignment kind {a.kind!r}", field=tx)
                clean[int(level)] = a
            object.__setattr__(self, tx, clean)
        problem = _check_data_bits(bits)
        if problem:
            raise ParameterError(problem, field="data")

    def at(self, tx: str, level: int) -> Assignment:
        return getattr(self, tx).get(level, Assignment.zero())

    @property
    def rates(self) -> Tuple[int, int]:
        r1 = sum(1 for a in self.tx1.values() if a.kind == DATA)
        r2 = sum(1 for a in self.tx2.values() if a.kind == DATA)
        return r1, r2

    def jam_levels(self) -> List[Tuple[str, int]]:
        return [(tx, lv) for tx in (TX1, TX2) for lv, a in sorted(getattr(self, tx).items()) if a.kind == JAM]


@dataclass(frozen=True)
class SchemeReport:
    r1: int
    r2: int
    leakage: Bits
    decodable1: bool
    decodable2: bool
    secure: bool

    def to_dict(self) -> Dict:
        return {
            "r1": self.r1,
            "r2": self.r2,
            "leakage_bits": float(self.leakage),
            "secure": self.secure,
            "decodable": [self.decodable1, self.decodable2],
        }


# ------------------------------ esquemas de canto ------------------------------

def _require_weak_moderate(p: DetParams) -> None:
    reg = classify_regime(p)
    if reg.kind != WEAK_MODERATE:
        raise RegimeError(f"corner schemes need n ≤ m (got m={p.m}, n={p.n})", field="n")


def corner_scheme_a(p: DetParams) -> Scheme:
    """(m, m-n): tx1 tudo dados; tx2 só nos níveis que não chegam ao rx1."""
    _require_weak_moderate(p)
    tx1 = {i: Assignment.data(W1, i) for i in range(1, p.m + 1)}
    tx2 = {i: Assignment.data(W2, i) for i in range(1, p.m - p.n + 1)}
    return Scheme(p, tx1, tx2)


def corner_scheme_b(p: DetParams) -> Scheme:
    """(m-n, m): tx2 tudo dados; tx1 mascara os níveis interferidos com bits aleatórios."""
    _require_weak_moderate(p)
    tx2 = {i: Assignment.data(W2, i) for i in range(1, p.m + 1)}
    tx1 = {i: Assignment.jam() for i in range(1, p.n + 1)}
    for j in range(1, p.m - p.n + 1):
        tx1[p.n + j] = Assignment.data(W1, j)
    return Scheme(p, tx1, tx2)


def without_jam(s: Scheme, tx: str, level: int) -> Scheme:
    """Cópia do esquema com o jamming daquele nível trocado por Zero."""
    if s.at(tx, level).kind != JAM:
        raise ParameterError(f"{tx} level {level} is not a jam level", field=tx)
    tx1, tx2 = dict(s.tx1), dict(s.tx2)
    (tx1 if tx == TX1 else tx2).pop(level)
    return Scheme(s.params, tx1, tx2)


# ------------------------------- formato texto ---------------------------------

def _parse_int(tok: str, what: str, line: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise SchemeParseError(f"{what} must be an integer, got {tok!r}", line)


def _parse_header(tokens: List[str], line: int) -> DetParams:
    vals: Dict[str, int] = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        key = key.lower()
        if not sep or key not in ("m", "n"):
            raise SchemeParseError(f"unknown keyword {tok!r} in header (expected m=<int> n=<int>)", line)
        if key in vals:
            raise SchemeParseError(f"duplicate {key} in header", line)
        vals[key] = _parse_int(val, key, line)
    if set(vals) != {"m", "n"}:
        raise SchemeParseError("header must be 'm=<int> n=<int>'", line)
    try:
        return DetParams(vals["m"], vals["n"], 0).check()
    except ParameterError as e:
        raise SchemeParseError(str(e), line)


def parse_scheme(text: str) -> Scheme:
    params: Optional[DetParams] = None
    assign: Dict[str, Dict[int, Assignment]] = {TX1: {}, TX2: {}}
    data_lines: Dict[str, Dict[int, int]] = {W1: {}, W2: {}}  # msg -> bit -> linha

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if params is None:
            params = _parse_header(tokens, lineno)
            continue

        tx = tokens[0].lower()
        if tx not in (TX1, TX2):
            raise SchemeParseError(f"unknown keyword {tokens[0]!r}", lineno)
        if len(tokens) < 3:
            raise SchemeParseError("expected 'tx<1|2> <level> <data w1|data w2|jam|zero> [bitIndex]'", lineno)
        level = _parse_int(tokens[1], "level", lineno)
        length = params.m if tx == TX1 else params.q
        if not 1 <= level <= length:
            raise SchemeParseError(f"{tx} level {level} out of range 1..{length}", lineno)
        if level in assign[tx]:
            raise SchemeParseError(f"duplicate level {level} for {tx}", lineno)

        kind = tokens[2].lower()
        if kind in (JAM, ZERO):
            if len(tokens) != 3:
                raise SchemeParseError(f"unexpected tokens after {kind!r}", lineno)
            assign[tx][level] = Assignment(kind)
        elif kind == DATA:
            if len(tokens) != 5:
                raise SchemeParseError("expected 'data w<1|2> <bitIndex>'", lineno)
            msg = tokens[3].lower()
            if msg not in (W1, W2):
                raise SchemeParseError(f"unknown keyword {tokens[3]!r}", lineno)
            if msg != _OWN_MESSAGE[tx]:
                raise SchemeParseError(f"{msg} data not allowed on {tx}", lineno)
            bit = _parse_int(tokens[4], "bitIndex", lineno)
            if bit in data_lines[msg]:
                raise SchemeParseError(f"repeated data bit index {bit} for {msg}", lineno)
            data_lines[msg][bit] = lineno
            assign[tx][level] = Assignment.data(msg, bit)
        else:
            raise SchemeParseError(f"unknown keyword {tokens[2]!r}", lineno)

    if params is None:
        raise SchemeParseError("missing header 'm=<int> n=<int>'", 1)

    # índices 1..k: aponta a linha do primeiro índice que passa de k
    for msg, by_bit in data_lines.items():
        k = len(by_bit)
        for bit in sorted(by_bit):
            if not 1 <= bit <= k:
                raise SchemeParseError(f"non-contiguous data indices for {msg}: {sorted(by_bit)}", by_bit[bit])

    return Scheme(params, assign[TX1], assign[TX2])


def format_scheme(s: Scheme) -> str:
    lines = [f"m={s.params.m} n={s.params.n}"]
    for tx in (TX1, TX2):
        for level, a in sorted(getattr(s, tx).items()):
            if a.kind == DATA:
                lines.append(f"{tx} {level} data {a.message} {a.bit}")
            else:
                lines.append(f"{tx} {level} {a.kind}")
    return "\n".join(lines) + "\n"


# ------------------------------- verificação -----------------------------------

def evaluate_scheme(s: Scheme, max_bits: int = None) -> SchemeReport:
    max_bits = SETTINGS.enum_max_bits if max_bits is None else max_bits
    p = s.params
    check_word_levels(p)
    r1, r2 = s.rates
    jams = s.jam_levels()
    k = r1 + r2 + len(jams)
    if k > max_bits:
        raise ResourceError(f"{k} free bits exceed the enumeration budget of {max_bits}")
    if k > 31:
        # contagens int64: N * c_xy <= 2^62
        raise ResourceError(f"{k} free bits exceed the 31-bit counting limit")
    log.debug("enumerando 2^%d atribuições (r1=%d, r2=%d, jam=%d)", k, r1, r2, len(jams))

    u = np.arange(1 << k, dtype=np.int64)
    w1 = u & ((1 << r1) - 1)
    w2 = (u >> r1) & ((1 << r2) - 1)
    jam = u >> (r1 + r2)
    del u
    jam_index = {lv: j for j, lv in enumerate(jams)}

    words = {TX1: np.zeros_like(w1), TX2: np.zeros_like(w1)}
    for tx in (TX1, TX2):
        for level, a in getattr(s, tx).items():
            if a.kind == DATA:
                src = w1 if a.message == W1 else w2
                col = (src >> (a.bit - 1)) & 1
            else:  # JAM
                col = (jam >> jam_index[(tx, level)]) & 1
            words[tx] |= col << (level - 1)
    del jam

    y1, y2 = transmit_words(words[TX1], words[TX2], p)
    del words

    leakage = mutual_information_counts(CountTable.from_samples(w2, y1))
    dec1 = conditional_entropy_counts(CountTable.from_samples(w1, y1)) == 0
    dec2 = conditional_entropy_counts(CountTable.from_samples(w2, y2)) == 0
    log.debug("vazamento I(W2;y1) = %s bits", leakage)
    return SchemeReport(r1, r2, leakage, bool(dec1), bool(dec2), leakage == 0)
