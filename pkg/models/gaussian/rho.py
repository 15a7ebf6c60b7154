"""
models/gaussian/rho.py
----------------------
Maximização escalar em ρ ∈ [-1, 1] para os limites que têm "max sobre ρ".

Estratégia: grade grossa (4001 pontos por default) e depois golden-section
na célula vizinha ao melhor ponto da grade, até o intervalo ficar menor que
tol. A grade cobre objetivos multimodais (soma de dois logs); a refinação só
substitui o ponto da grade se for estritamente melhor, então empates ficam
com o menor índice da grade.

O objetivo pode ser escalar ou vetorizado (numpy): se f(grade) devolver um
array do tamanho da grade ele é usado direto, senão avaliamos ponto a ponto.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from common.config.settings import SETTINGS
from common.errors import NumericError, ParameterError

log = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2       # 1/phi
INV_PHI_SQ = (3 - math.sqrt(5)) / 2    # 1/phi^2

Objective = Callable[[float], float]


@dataclass(frozen=True)
class RhoResult:
    rho: float
    value: float


def _finite(v: float, rho: float) -> float:
    v = float(v)
    if not math.isfinite(v):
        raise NumericError(f"objective is not finite at rho={rho!r}: {v!r}")
    return v


def _eval_grid(objective: Objective, grid: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(objective(grid), dtype=float)
    except (TypeError, ValueError):
        vals = None
    if vals is None or vals.shape not in (grid.shape, ()):
        vals = np.array([objective(float(r)) for r in grid], dtype=float)
    vals = np.broadcast_to(vals, grid.shape)
    bad = ~np.isfinite(vals)
    if bad.any():
        i = int(np.argmax(bad))
        raise NumericError(f"objective is not finite at rho={grid[i]!r}: {vals[i]!r}")
    return vals


def golden_section_max(objective: Objective, a: float, b: float, tol: float) -> Tuple[float, float]:
    """Golden-section para máximo em [a, b]; devolve (x, f(x)) do melhor ponto avaliado."""
    dist = b - a
    c = a + INV_PHI_SQ * dist
    d = a + INV_PHI * dist
    yc = _finite(objective(c), c)
    yd = _finite(objective(d), d)
    while dist > tol:
        if yc >= yd:
            b, d, yd = d, c, yc
            dist = b - a
            c = a + INV_PHI_SQ * dist
            yc = _finite(objective(c), c)
        else:
            a, c, yc = c, d, yd
            dist = b - a
            d = a + INV_PHI * dist
            yd = _finite(objective(d), d)
    return (c, yc) if yc >= yd else (d, yd)


def maximize_over_rho(objective: Objective, tol: float = None, grid_points: int = None) -> RhoResult:
    tol = SETTINGS.rho_tol if tol is None else tol
    grid_points = SETTINGS.rho_grid_points if grid_points is None else grid_points
    if not tol > 0:
        raise ParameterError(f"tol must be > 0, got {tol!r}", field="tol")
    if grid_points < 2:
        raise ParameterError("grid_points must be ≥ 2", field="grid_points")

    grid = np.linspace(-1.0, 1.0, grid_points)
    vals = _eval_grid(objective, grid)
    i = int(np.argmax(vals))   # primeiro máximo => menor índice em empate
    best = RhoResult(float(grid[i]), float(vals[i]))

    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, grid_points - 1)]
    x, fx = golden_section_max(objective, float(lo), float(hi), tol)
    if fx > best.value:
        best = RhoResult(float(x), float(fx))
    log.debug("rho* = %.6f, valor = %.6f", best.rho, best.value)
    return best
