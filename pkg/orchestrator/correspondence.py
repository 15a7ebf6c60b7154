# orchestrator/correspondence.py
# -----------------------------------------------------------------------------
# Correspondência em alto SNR entre os limites Gaussianos e os determinísticos
#
# Mapeamento:
#   m = (⌊0.5 log2 SNR⌋)+,  n = (⌊0.5 log2 INR⌋)+,  C = ⌊C_G⌋
#   inverso canônico: SNR = 2^{2m}, INR = 2^{2n}, C_G = C (0.5 log SNR inteiro)
#
# Comparações (todas com ρ = 0):
#   α <= 1 : thm4 r1, r2 ≈ m; thm4 e thm5 soma ≈ 2m-n+C; thm5 r2 ≈ m
#   1<α<2  : thm6 r1 ≈ m;  thm6 r2 ≈ 2m-n;  thm6 soma ≈ m
# Os limites que dependem de ρ são sempre avaliados com C_G = 0 e comparados
# com os alvos de C = 0; as somas sem ρ (teoremas 4 e 5) ganham +C.
# -----------------------------------------------------------------------------

import logging
import math
from dataclasses import dataclass, field
from typing import Dict

from common.errors import ParameterError, UnsupportedRegimeError
from models.deterministic.channel import DetParams, HIGH, WEAK_MODERATE, classify_regime
from models.gaussian.regions import GaussParams, thm4_region, thm5_region, thm6_region

log = logging.getLogger(__name__)

# limite para 2^{2m} caber com folga num float
MAX_LEVELS = 500

# tolerâncias por limite (bits), a partir dos resíduos analíticos O(2^{-2(m-n)})
TOL_TIGHT = 0.01
TOL_LOOSE = 0.1


@dataclass(frozen=True)
class GapReport:
    det: DetParams
    gauss: GaussParams
    gaps: Dict[str, float]
    tolerances: Dict[str, float] = field(default_factory=dict)

    @property
    def max_gap(self) -> float:
        return max(self.gaps.values()) if self.gaps else 0.0

    @property
    def within_tolerance(self) -> Dict[str, bool]:
        return {k: self.gaps[k] <= self.tolerances[k] for k in self.gaps}

    def to_dict(self) -> Dict:
        return {
            "mapping": {
                "det": {"m": self.det.m, "n": self.det.n, "c": self.det.c},
                "gauss": self.gauss.to_dict(),
            },
            "gaps": dict(self.gaps),
            "tolerances": dict(self.tolerances),
            "within_tolerance": self.within_tolerance,
            "max_gap": self.max_gap,
        }


def _half_log2_floor(x: float) -> int:
    # (⌊0.5 log2 x⌋)+ ; x < 1 (inclui 0) vira 0
    if x < 1:
        return 0
    return max(0, math.floor(0.5 * math.log2(x)))


def det_params_from_gauss(g: GaussParams) -> DetParams:
    return DetParams(_half_log2_floor(g.snr), _half_log2_floor(g.inr), math.floor(g.cg))


def gauss_params_from_det(d: DetParams) -> GaussParams:
    for name in ("m", "n"):
        if getattr(d, name) > MAX_LEVELS:
            raise ParameterError(f"{name} must be ≤ {MAX_LEVELS} (2^(2{name}) overflows)", field=name)
    return GaussParams(float(2 ** (2 * d.m)), float(2 ** (2 * d.n)), float(d.c))


def thm5_r2_tolerance(d: DetParams) -> float:
    """Resíduo do limite de R2 com segredo (ρ = 0): ≈ 0.5 log2(1 + 2^{-2(m-n)}); vale 0.5 em α = 1."""
    return 0.5 * math.log2(1 + 2.0 ** (-2 * (d.m - d.n))) + TOL_TIGHT


def thm4_sum_tolerance(d: DetParams) -> float:
    """
    Soma sem segredo menos 2m-n+C, com k = m-n:
      log2(1 + 2^{-k}) + 0.5 log2(1 + 2^{-2k} + 2^{-2m}) - 0.5 log2(1 + 2^{-2n}) + δ,
      0 <= δ <= 0.5 log2(1 + 2^{-2m}).
    A tolerância limita o módulo disso para quaisquer m, n.
    """
    k = d.m - d.n
    resid = (math.log2(1 + 2.0 ** (-k)) + 0.5 * math.log2(1 + 2.0 ** (-2 * k))
             + math.log2(1 + 2.0 ** (-2 * d.m)) + 0.5 * math.log2(1 + 2.0 ** (-2 * d.n)))
    return resid + TOL_TIGHT


def thm6_r2_tolerance(d: DetParams) -> float:
    """Resíduo de R2 no regime alto: 0.5 |log2((1 + 2^{2(n-2m)}) / (1 + 2^{2(m-n)}))|; zero em α = 3/2."""
    num = 1 + 2.0 ** (2 * (d.n - 2 * d.m))
    den = 1 + 2.0 ** (2 * (d.m - d.n))
    return 0.5 * abs(math.log2(num / den)) + TOL_TIGHT


def thm6_sum_tolerance(d: DetParams) -> float:
    """Σ_{y2|s} ≈ 1 + 2^{2(m-n)+1} mais o termo 2^{2(n-2m)} do primeiro log; nunca abaixo de TOL_LOOSE."""
    resid = 0.5 * math.log2((1 + 2.0 ** (2 * (d.m - d.n) + 1)) * (1 + 2.0 ** (2 * (d.n - 2 * d.m))))
    return max(TOL_LOOSE, resid + TOL_TIGHT)


def correspondence_report(d: DetParams) -> GapReport:
    reg = classify_regime(d)
    g = gauss_params_from_det(d)
    g0 = GaussParams(g.snr, g.inr, 0.0)   # ρ = 0
    m, n, c = d.m, d.n, d.c
    gaps: Dict[str, float] = {}
    tols: Dict[str, float] = {}

    def put(name: str, value: float, target: float, tol: float):
        gaps[name] = abs(value - target)
        tols[name] = tol

    if reg.kind == WEAK_MODERATE:
        t4 = thm4_region(g)
        t5 = thm5_region(g)
        put("thm4_r1 vs m", t4.bound("r1"), m, TOL_TIGHT)
        put("thm4_r2 vs m", t4.bound("r2"), m, TOL_TIGHT)
        put("thm4_sum vs 2m-n+C", t4.bound("sum"), 2 * m - n + c, thm4_sum_tolerance(d))
        put("thm5_sum vs 2m-n+C", t5.bound("sum"), 2 * m - n + c, TOL_TIGHT)
        put("thm5_r2 vs m", thm5_region(g0).bound("r2"), m, thm5_r2_tolerance(d))
    elif reg.kind == HIGH:
        t6 = thm6_region(g0)
        put("thm6_r1 vs m", t6.bound("r1"), m, TOL_TIGHT)
        put("thm6_r2 vs 2m-n", t6.bound("r2"), 2 * m - n, thm6_r2_tolerance(d))
        put("thm6_sum vs m", t6.bound("sum"), m, thm6_sum_tolerance(d))
    else:
        raise UnsupportedRegimeError(
            f"no high-SNR comparison for the very high regime (α = {reg.alpha})", field="n")

    rep = GapReport(d, g, gaps, tols)
    log.debug("correspondência (%d,%d,%d): max_gap = %.6f", m, n, c, rep.max_gap)
    return rep
