# interfaces/reporting/documents.py
# -----------------------------------------------------------------------------
# Documentos emitidos pela CLI e pelos presets de figuras.
#
# Cada builder devolve um dict pronto para dumps_canonical (JSON) e uma
# função irmã *_records devolve as linhas para CSV. CLI e figures.py usam os
# mesmos builders, então o mesmo parâmetro gera os mesmos bytes nos dois.
# -----------------------------------------------------------------------------

import logging
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from common.errors import ParameterError
from common.geometry.region import RatePair, RateRegion, contains, vertices
from models.deterministic.channel import DetParams
from models.deterministic.regions import det_outer_region
from models.deterministic.schemes import (
    corner_scheme_a, corner_scheme_b, evaluate_scheme, format_scheme, parse_scheme,
)
from models.gaussian.regions import (
    GaussParams, THEOREMS, best_outer_region, classify_gauss_regime,
)
from orchestrator.correspondence import correspondence_report

log = logging.getLogger(__name__)

BOUNDS = ("r1", "r2", "sum")

SWEEP_COLUMNS = ["snr", "inr", "cg", "theorem", "bound", "value"]
VERTEX_COLUMNS = ["region", "vertex", "r1", "r2"]
BOUND_COLUMNS = ["theorem", "bound", "value"]
SCHEME_COLUMNS = ["name", "r1", "r2", "leakage_bits", "secure", "decodable1", "decodable2", "on_outer_boundary"]
GAP_COLUMNS = ["bound", "gap", "tolerance", "within_tolerance"]


# --------------------------------- parsing ------------------------------------

def parse_theorems(text: str) -> Tuple[int, ...]:
    """'4,5,6' -> (4, 5, 6); ordem e duplicatas normalizadas."""
    out = []
    for tok in str(text).split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            t = int(tok)
        except ValueError:
            raise ParameterError(f"unknown theorem {tok!r} (expected 4, 5 or 6)", field="theorems")
        if t not in THEOREMS:
            raise ParameterError(f"unknown theorem {t} (expected 4, 5 or 6)", field="theorems")
        out.append(t)
    if not out:
        raise ParameterError("at least one theorem is required", field="theorems")
    return tuple(sorted(set(out)))


def parse_cg_range(text: str) -> List[float]:
    """'start:stop:step' inclusivo nas duas pontas, em aritmética exata (0:3:0.5 -> 7 valores)."""
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ParameterError(f"expected start:stop:step, got {text!r}", field="cg_range")
    try:
        start, stop, step = (Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ParameterError(f"expected numbers in start:stop:step, got {text!r}", field="cg_range")
    if step <= 0:
        raise ParameterError("step must be > 0", field="cg_range")
    if start < 0 or stop < start:
        raise ParameterError("need 0 ≤ start ≤ stop", field="cg_range")
    values = []
    v = start
    while v <= stop:
        values.append(float(v))
        v += step
    return values


# ------------------------------ determinístico --------------------------------

def det_region_doc(p: DetParams) -> Dict[str, Any]:
    return det_outer_region(p).to_dict()


def region_vertex_records(label: str, r: RateRegion) -> List[Dict[str, Any]]:
    return [{"region": label, "vertex": i, "r1": v.r1, "r2": v.r2} for i, v in enumerate(vertices(r))]


def det_region_records(p: DetParams) -> List[Dict[str, Any]]:
    return region_vertex_records("det", det_outer_region(p))


def _on_sum_face(region: RateRegion, r1: int, r2: int) -> bool:
    # ponto dentro da região e com R1 + R2 igual ao limite de soma (inteiros: igualdade exata)
    return contains(region, RatePair(r1, r2)) and r1 + r2 == region.bound("sum")


def corner_schemes_doc(p: DetParams, max_bits: int = None) -> Dict[str, Any]:
    outer = det_outer_region(DetParams(p.m, p.n, 0))
    schemes = []
    for name, build in (("A", corner_scheme_a), ("B", corner_scheme_b)):
        s = build(p)
        rep = evaluate_scheme(s, max_bits=max_bits)
        schemes.append({
            "name": name,
            "scheme": format_scheme(s),
            "report": rep.to_dict(),
            "on_outer_boundary": _on_sum_face(outer, rep.r1, rep.r2),
        })
    return {"params": {"m": p.m, "n": p.n}, "schemes": schemes}


def corner_schemes_records(doc: Dict[str, Any]) -> List[Dict[str, Any]]:
    rows = []
    for s in doc["schemes"]:
        rep = s["report"]
        rows.append({
            "name": s["name"], "r1": rep["r1"], "r2": rep["r2"],
            "leakage_bits": rep["leakage_bits"], "secure": rep["secure"],
            "decodable1": rep["decodable"][0], "decodable2": rep["decodable"][1],
            "on_outer_boundary": s["on_outer_boundary"],
        })
    return rows


def verify_scheme_doc(text: str, max_bits: int = None) -> Dict[str, Any]:
    s = parse_scheme(text)
    rep = evaluate_scheme(s, max_bits=max_bits)
    return {"params": {"m": s.params.m, "n": s.params.n}, "report": rep.to_dict()}


def verify_scheme_records(doc: Dict[str, Any]) -> List[Dict[str, Any]]:
    rep = doc["report"]
    return [{
        "name": "scheme", "r1": rep["r1"], "r2": rep["r2"],
        "leakage_bits": rep["leakage_bits"], "secure": rep["secure"],
        "decodable1": rep["decodable"][0], "decodable2": rep["decodable"][1],
        "on_outer_boundary": None,
    }]


# --------------------------------- Gaussiano ----------------------------------

def gauss_params_doc(g: GaussParams) -> Dict[str, Any]:
    reg = classify_gauss_regime(g)
    d: Dict[str, Any] = dict(g.to_dict())
    d["regime"] = reg.kind if reg else None
    d["alpha"] = float(reg.alpha) if reg else None
    return d


def gauss_regions(g: GaussParams, theorems: Sequence[int], best: bool = False) -> Dict[str, RateRegion]:
    out = {f"thm{t}": THEOREMS[t](g) for t in theorems}
    if best:
        out["best"] = best_outer_region(g)
    return out


def gauss_region_doc(g: GaussParams, theorems: Sequence[int], best: bool = False) -> Dict[str, Any]:
    regions = gauss_regions(g, theorems, best)
    return {"params": gauss_params_doc(g), "regions": {k: r.to_dict() for k, r in regions.items()}}


def gauss_bound_records(g: GaussParams, theorems: Sequence[int], best: bool = False) -> List[Dict[str, Any]]:
    rows = []
    for label, r in gauss_regions(g, theorems, best).items():
        for b in BOUNDS:
            rows.append({"theorem": label, "bound": b, "value": r.bound(b)})
    return rows


def sweep_records(snr: float, inr: float, cg_values: Sequence[float], theorems: Sequence[int]) -> List[Dict[str, Any]]:
    """Uma linha por (C_G, teorema, limite), na ordem dos parâmetros."""
    rows = []
    for cg in cg_values:
        g = GaussParams(snr, inr, cg)
        for t in theorems:
            r = THEOREMS[t](g)
            for b in BOUNDS:
                rows.append({"snr": g.snr, "inr": g.inr, "cg": g.cg, "theorem": t, "bound": b, "value": r.bound(b)})
    log.debug("sweep: %d linhas (%d valores de C_G)", len(rows), len(cg_values))
    return rows


def sweep_doc(snr: float, inr: float, cg_values: Sequence[float], theorems: Sequence[int]) -> Dict[str, Any]:
    return {
        "params": {"snr": float(snr), "inr": float(inr), "theorems": list(theorems)},
        "rows": sweep_records(snr, inr, cg_values, theorems),
    }


# ------------------------------- correspondência -------------------------------

def correspond_doc(p: DetParams) -> Dict[str, Any]:
    return correspondence_report(p).to_dict()


def correspond_records(doc: Dict[str, Any]) -> List[Dict[str, Any]]:
    return [
        {"bound": k, "gap": v, "tolerance": doc["tolerances"][k], "within_tolerance": doc["within_tolerance"][k]}
        for k, v in sorted(doc["gaps"].items())
    ]
