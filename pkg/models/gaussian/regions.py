"""
models/gaussian/regions.py
--------------------------
Limites externos da região de capacidade secreta do Z-IC Gaussiano com
cooperação unidirecional de taxa C_G (tx2 -> tx1).

Inclui:
- GaussParams (SNR, INR lineares; C_G em bits/uso) + construtor por (P, h_d, h_c)
- thm4_region: limite sem restrição de segredo (vale em todos os regimes)
- thm5_region: usa o segredo no rx1; só no regime fraco/moderado (INR <= SNR)
- thm6_region: limites com Σ_{y2|s}; vale em todos os regimes
- sigma_y2_given_s: complemento de Schur 2x2 em forma fechada
- best_outer_region: interseção dos limites aplicáveis

Convenções:
- log na base 2, taxas em bits por uso do canal.
- C_G = 0 fixa ρ = 0 (transmissores independentes); C_G > 0 busca em [-1, 1].
- Conversão de dB é responsabilidade da CLI, nunca deste módulo.
- Objetivos aceitam ρ escalar ou array numpy (grade vetorizada em rho.py).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from common.config.settings import SETTINGS
from common.errors import NumericError, ParameterError, RegimeError, SingularityError
from common.geometry.region import RateRegion, intersect
from models.deterministic.channel import Regime, regime_for_alpha
from models.gaussian.rho import RhoResult, maximize_over_rho

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaussParams:
    snr: float
    inr: float
    cg: float = 0.0

    def __post_init__(self):
        for name in ("snr", "inr", "cg"):
            v = getattr(self, name)
            try:
                v = float(v)
            except (TypeError, ValueError):
                raise ParameterError(f"{name} must be a number, got {v!r}", field=name)
            if not math.isfinite(v):
                raise ParameterError(f"{name} must be finite", field=name)
            if v < 0:
                raise ParameterError(f"{name} must be ≥ 0", field=name)
            object.__setattr__(self, name, v)

    @classmethod
    def from_power(cls, p: float, hd: float, hc: float, cg: float = 0.0) -> "GaussParams":
        """SNR = h_d² P, INR = h_c² P."""
        return cls(hd * hd * p, hc * hc * p, cg)

    @property
    def root_si(self) -> float:
        return math.sqrt(self.snr * self.inr)

    def to_dict(self) -> Dict[str, float]:
        return {"snr": self.snr, "inr": self.inr, "cg": self.cg}


def classify_gauss_regime(g: GaussParams) -> Optional[Regime]:
    """α = log INR / log SNR; None quando SNR <= 1 (α indefinido)."""
    if g.snr <= 1:
        return None
    alpha = math.log(g.inr) / math.log(g.snr) if g.inr > 0 else 0.0
    return Regime(regime_for_alpha(alpha), alpha)


def _half_log2(x):
    """0.5 log2(x) com checagem de argumento positivo (escalar ou array)."""
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr <= 0):
        raise NumericError(f"log argument must be positive and finite, got {x!r}")
    return 0.5 * np.log2(x)


def _rho_or_zero(g: GaussParams, objective) -> RhoResult:
    # sem cooperação os sinais são independentes: ρ = 0 é o único valor possível
    if g.cg == 0:
        return RhoResult(0.0, float(objective(0.0)))
    return maximize_over_rho(objective)


# ------------------------------- objetivos em ρ --------------------------------

def r2_objective(g: GaussParams):
    """0.5 log2(1 + SNR - (ρ SNR + √(SNR INR))² / (1 + SNR + INR + 2ρ√(SNR INR)))."""
    s, i, r = g.snr, g.inr, g.root_si

    def f(rho):
        den = 1 + s + i + 2 * rho * r   # >= 1 + (√SNR - √INR)² > 0
        return _half_log2(1 + s - (rho * s + r) ** 2 / den)

    return f


def sum6_objective(g: GaussParams, det_guard: float = None):
    """Termo da soma do limite com Σ_{y2|s} (sem o + C_G)."""
    s, i, r = g.snr, g.inr, g.root_si

    def f(rho):
        first = 1 + s + i + 2 * rho * r - (rho * s + r) ** 2 / (1 + s)
        return _half_log2(first) + _half_log2(sigma_y2_given_s(g, rho, det_guard))

    return f


def sigma_y2_given_s(g: GaussParams, rho, det_guard: float = None):
    """
    Σ_{y2|s} = 1 + SNR - Σ_{y2,s} Σ_{s,s}^{-1} Σ_{y2,s}^T com
      Σ_{y2,s} = [ρ SNR, ρ SNR + √(SNR INR)]
      Σ_{s,s}  = [[1 + SNR,           SNR + ρ√(SNR INR)],
                  [SNR + ρ√(SNR INR), 1 + SNR + INR + 2ρ√(SNR INR)]]
    Inversa 2x2 em forma fechada.
    """
    det_guard = SETTINGS.det_guard if det_guard is None else det_guard
    rho_arr = np.asarray(rho, dtype=float)
    if np.any(np.abs(rho_arr) > 1):
        raise ParameterError(f"|rho| must be ≤ 1, got {rho!r}", field="rho")
    s, i, r = g.snr, g.inr, g.root_si

    v1 = rho * s
    v2 = rho * s + r
    p11 = 1 + s
    p12 = s + rho * r
    p22 = 1 + s + i + 2 * rho * r
    det = p11 * p22 - p12 * p12
    if np.any(np.abs(det) < det_guard):
        raise SingularityError(f"Σ_ss is singular (|det| < {det_guard}) at rho={rho!r}")
    quad = (v1 * v1 * p22 - 2 * v1 * v2 * p12 + v2 * v2 * p11) / det
    return 1 + s - quad


# ---------------------------------- teoremas -----------------------------------

def _region(g: GaussParams, theorem: int, r1: float, r2: float, total: float, extra: Dict = None) -> RateRegion:
    params = {"model": "gaussian", "theorem": theorem, **g.to_dict()}
    params.update(extra or {})
    return RateRegion.from_triples([(1, 0, r1), (0, 1, r2), (1, 1, total)], params)


def thm4_region(g: GaussParams) -> RateRegion:
    s, i = g.snr, g.inr
    single = float(_half_log2(1 + s))
    total = float(_half_log2(1 + s + i + 2 * g.root_si) + _half_log2(1 + s / (1 + i))) + g.cg
    return _region(g, 4, single, single, total)


def thm5_region(g: GaussParams) -> RateRegion:
    if g.inr > g.snr:
        raise RegimeError(f"theorem 5 needs INR ≤ SNR (got SNR={g.snr}, INR={g.inr})", field="inr")
    s, i = g.snr, g.inr
    r1 = float(_half_log2(1 + s))
    best = _rho_or_zero(g, r2_objective(g))
    total = float(np.log2(1 + s) - 0.5 * np.log2(1 + i)) + g.cg
    return _region(g, 5, r1, best.value, total, {"rho_r2": best.rho})


def thm6_region(g: GaussParams) -> RateRegion:
    r1 = float(_half_log2(1 + g.snr))
    best_r2 = _rho_or_zero(g, r2_objective(g))
    best_sum = _rho_or_zero(g, sum6_objective(g))
    return _region(g, 6, r1, best_r2.value, best_sum.value + g.cg,
                   {"rho_r2": best_r2.rho, "rho_sum": best_sum.rho})


def applicable_theorems(g: GaussParams) -> Tuple[int, ...]:
    return (4, 5, 6) if g.inr <= g.snr else (4, 6)


THEOREMS = {4: thm4_region, 5: thm5_region, 6: thm6_region}


def best_outer_region(g: GaussParams) -> RateRegion:
    """Interseção (união das restrições) dos limites aplicáveis a g."""
    regions = [THEOREMS[t](g) for t in applicable_theorems(g)]
    out = regions[0]
    for r in regions[1:]:
        out = intersect(out, r)
    params = {"model": "gaussian", "theorem": "best", **g.to_dict(),
              "theorems": ",".join(str(t) for t in applicable_theorems(g))}
    log.debug("best_outer_region %s: sum = %.6f", params["theorems"], out.bound("sum"))
    return RateRegion(out.constraints, params)
