# models/deterministic/regions.py
# Regiões externas (outer bounds) da capacidade secreta do Z-IC determinístico.
# As restrições redundantes ficam na saída de propósito: o sistema emitido
# espelha o enunciado de cada regime (poda é com common/geometry se precisar).
from common.geometry.region import RateRegion
from models.deterministic.channel import (
    DetParams, HIGH, VERY_HIGH, WEAK_MODERATE, classify_regime,
)


def det_outer_region(p: DetParams) -> RateRegion:
    reg = classify_regime(p)
    m, n, c = p.m, p.n, p.c
    if reg.kind == WEAK_MODERATE:
        triples = [(1, 0, m), (0, 1, m), (1, 1, 2 * m - n + c)]
    elif reg.kind == HIGH:
        triples = [(1, 0, m), (0, 1, 2 * m - n), (1, 1, m + c)]
    elif reg.kind == VERY_HIGH:
        # R2 <= 0 independente de C: segmento degenerado, não região vazia
        triples = [(1, 0, m), (0, 1, 0)]
    else:  # pragma: no cover
        raise AssertionError(reg.kind)
    params = {"model": "deterministic", "m": m, "n": n, "c": c, "regime": reg.kind}
    return RateRegion.from_triples(triples, params)
