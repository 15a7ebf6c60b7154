"""
common/geometry/region.py
-------------------------
Regiões de taxa 2-D (R1, R2) descritas por semiplanos a1*R1 + a2*R2 <= b,
com R1 >= 0 e R2 >= 0 implícitos.

Inclui:
- RateRegion / Constraint / RatePair (tipos imutáveis)
- vertices(): interseção par-a-par das retas (eixos incluídos) + filtro de
  factibilidade, ordem anti-horária a partir de (0,0)
- contains(), intersect(), area() (shoelace), is_subset()

Observações:
- k <= ~10 restrições sempre, então O(k^2) par-a-par basta.
- Regiões degeneradas (área zero) são válidas: R2 <= 0 vira um segmento.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Sequence, Tuple

import numpy as np

from common.config.settings import SETTINGS
from common.errors import GeometryError

# b ligeiramente negativo por arredondamento (ex.: log2(1) = -0.0) é tratado como 0
_NEG_B_SLACK = 1e-12


@dataclass(frozen=True)
class Constraint:
    a1: float
    a2: float
    b: float

    def __post_init__(self):
        if self.a1 < 0 or self.a2 < 0:
            raise GeometryError(f"coeficientes negativos: ({self.a1}, {self.a2})")
        if self.a1 == 0 and self.a2 == 0:
            raise GeometryError("restrição com (a1, a2) = (0, 0)")
        if not np.isfinite(self.b):
            raise GeometryError(f"b não finito: {self.b!r}")
        if self.b < 0:
            if self.b < -_NEG_B_SLACK:
                raise GeometryError(f"b negativo: {self.b!r}")
            object.__setattr__(self, "b", 0.0)

    @property
    def kind(self) -> str:
        """Nome do limite: r1, r2, sum (ou 'general' para combinações arbitrárias)."""
        if self.a2 == 0:
            return "r1"
        if self.a1 == 0:
            return "r2"
        if self.a1 == self.a2:
            return "sum"
        return "general"

    def value(self, r1: float, r2: float) -> float:
        return self.a1 * r1 + self.a2 * r2

    def to_dict(self) -> Dict[str, float]:
        return {"a1": float(self.a1), "a2": float(self.a2), "b": float(self.b)}


@dataclass(frozen=True)
class RatePair:
    r1: float
    r2: float


@dataclass(frozen=True)
class RateRegion:
    constraints: Tuple[Constraint, ...]
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))

    @classmethod
    def from_triples(cls, triples: Sequence[Tuple[float, float, float]], params: Mapping[str, Any] = None) -> "RateRegion":
        return cls(tuple(Constraint(float(a1), float(a2), float(b)) for a1, a2, b in triples), dict(params or {}))

    @property
    def bounded(self) -> bool:
        return any(c.a1 > 0 for c in self.constraints) and any(c.a2 > 0 for c in self.constraints)

    def bound(self, kind: str) -> float:
        """Menor b entre as restrições de um tipo (r1, r2, sum). Sem restrição do tipo => inf."""
        bs = [c.b for c in self.constraints if c.kind == kind]
        return min(bs) if bs else float("inf")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": dict(self.params),
            "constraints": [c.to_dict() for c in self.constraints],
            "vertices": [[p.r1, p.r2] for p in vertices(self)],
        }

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "RateRegion":
        """Inverso de to_dict (os vértices são recalculados, não lidos)."""
        return cls.from_triples([(c["a1"], c["a2"], c["b"]) for c in d["constraints"]], d.get("params", {}))


# -----------------------------------------------------------------------------
# Operações
# -----------------------------------------------------------------------------

def _halfplanes(r: RateRegion) -> np.ndarray:
    """Linhas [a1, a2, b] incluindo os eixos (-R1 <= 0, -R2 <= 0)."""
    rows = [[c.a1, c.a2, c.b] for c in r.constraints]
    rows += [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0]]
    return np.asarray(rows, dtype=float)


def _feasible(hp: np.ndarray, x: float, y: float, tol: float) -> bool:
    return bool(np.all(hp[:, 0] * x + hp[:, 1] * y <= hp[:, 2] + tol))


def vertices(r: RateRegion, tol: float = None) -> List[RatePair]:
    tol = SETTINGS.tol_feasible if tol is None else tol
    if not r.bounded:
        raise GeometryError("região ilimitada: precisa de restrição com a1 > 0 e com a2 > 0")

    hp = _halfplanes(r)
    pts: List[Tuple[float, float]] = []
    k = len(hp)
    for i in range(k):
        a1, b1, c1 = hp[i]
        for j in range(i + 1, k):
            a2, b2, c2 = hp[j]
            det = a1 * b2 - a2 * b1
            if abs(det) < 1e-15:
                continue
            x = (c1 * b2 - c2 * b1) / det
            y = (a1 * c2 - a2 * c1) / det
            if not _feasible(hp, x, y, tol):
                continue
            if any(abs(x - px) <= SETTINGS.tol_dedup and abs(y - py) <= SETTINGS.tol_dedup for px, py in pts):
                continue
            pts.append((x, y))

    if not pts:
        # b >= 0 garante (0,0) factível; chegar aqui é bug numérico
        raise GeometryError("nenhum vértice factível")

    # zera resíduos tipo 1e-17 para a ordenação e a saída ficarem estáveis
    pts = [(0.0 if abs(x) <= tol else x, 0.0 if abs(y) <= tol else y) for x, y in pts]

    arr = np.asarray(pts)
    c = arr.mean(axis=0)
    ang = np.arctan2(arr[:, 1] - c[1], arr[:, 0] - c[0])
    order = list(np.argsort(ang, kind="stable"))
    ordered = [pts[i] for i in order]

    # começa em (0,0), que é sempre vértice (canto dos eixos)
    start = min(range(len(ordered)), key=lambda i: ordered[i][0] ** 2 + ordered[i][1] ** 2)
    ordered = ordered[start:] + ordered[:start]
    return [RatePair(float(x), float(y)) for x, y in ordered]


def contains(r: RateRegion, p: RatePair, tol: float = None) -> bool:
    tol = SETTINGS.tol_feasible if tol is None else tol
    if p.r1 < -tol or p.r2 < -tol:
        return False
    return all(c.value(p.r1, p.r2) <= c.b + tol for c in r.constraints)


def intersect(a: RateRegion, b: RateRegion) -> RateRegion:
    params = dict(a.params)
    params.update(b.params)
    return RateRegion(a.constraints + b.constraints, params)


def area(r: RateRegion) -> float:
    vs = vertices(r)
    if len(vs) < 3:
        return 0.0
    x = np.array([v.r1 for v in vs])
    y = np.array([v.r2 for v in vs])
    return float(0.5 * abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def is_subset(a: RateRegion, b: RateRegion, tol: float = None) -> bool:
    """a ⊆ b  <=>  todo vértice de a satisfaz b (ambas convexas)."""
    return all(contains(b, v, tol) for v in vertices(a))
