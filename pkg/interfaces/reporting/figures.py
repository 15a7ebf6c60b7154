# interfaces/reporting/figures.py
# -----------------------------------------------------------------------------
# Regenera os dados das figuras a partir dos presets de config/figures.yaml.
#
# Um arquivo por preset em out_dir:
#   det-region      -> JSON {"preset", "regions": [região por C]}
#   corner-schemes  -> JSON (mesmo documento da CLI)
#   gauss-region    -> JSON (mesmo documento da CLI)
#   sweep           -> CSV  snr,inr,cg,theorem,bound,value
#   correspond      -> JSON (GapReport)
# Bytes determinísticos: rodar duas vezes dá os mesmos arquivos.
# -----------------------------------------------------------------------------

import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Mapping

from common.config.settings import SETTINGS
from common.errors import ParameterError
from common.utils.io import read_yaml_or_json, records_to_csv, write_json, write_text
from interfaces.reporting.documents import (
    SWEEP_COLUMNS, corner_schemes_doc, correspond_doc, det_region_doc,
    gauss_region_doc, parse_theorems, sweep_records,
)
from models.deterministic.channel import DetParams
from models.gaussian.regions import GaussParams

log = logging.getLogger(__name__)

FIGURES_PATH = Path(__file__).resolve().parents[2] / "config" / "figures.yaml"


def _as_list(v) -> List:
    return list(v) if isinstance(v, (list, tuple)) else [v]


def _theorems(spec: Mapping[str, Any]) -> tuple:
    return parse_theorems(",".join(str(t) for t in _as_list(spec.get("theorems", [4, 5, 6]))))


def _gauss(spec: Mapping[str, Any], cg: float = None) -> GaussParams:
    cg = float(spec.get("cg", 0.0)) if cg is None else cg
    if "power" in spec:
        return GaussParams.from_power(float(spec["power"]), float(spec["hd"]), float(spec["hc"]), cg)
    return GaussParams(float(spec["snr"]), float(spec["inr"]), cg)


def build_preset(name: str, spec: Mapping[str, Any]):
    """Devolve (extensão, conteúdo) do preset: dict para JSON ou texto para CSV."""
    kind = spec.get("kind")
    if kind == "det-region":
        regions = [det_region_doc(DetParams(int(spec["m"]), int(spec["n"]), int(c))) for c in _as_list(spec.get("c", 0))]
        return "json", {"preset": name, "regions": regions}
    if kind == "corner-schemes":
        return "json", corner_schemes_doc(DetParams(int(spec["m"]), int(spec["n"])).check())
    if kind == "gauss-region":
        return "json", gauss_region_doc(_gauss(spec), _theorems(spec), bool(spec.get("best", False)))
    if kind == "sweep":
        base = _gauss(spec, 0.0)
        cgs = [float(c) for c in _as_list(spec.get("cg", 0.0))]
        rows = sweep_records(base.snr, base.inr, cgs, _theorems(spec))
        return "csv", records_to_csv(rows, SWEEP_COLUMNS, SETTINGS.decimals)
    if kind == "correspond":
        return "json", correspond_doc(DetParams(int(spec["m"]), int(spec["n"]), int(spec.get("c", 0))))
    raise ParameterError(f"preset {name!r}: unknown kind {kind!r}", field="kind")


def load_presets(path=None) -> Dict[str, Dict[str, Any]]:
    cfg = read_yaml_or_json(str(path or FIGURES_PATH)) or {}
    presets = cfg.get("presets") or {}
    if not isinstance(presets, dict):
        raise ParameterError("'presets' must be a mapping of name -> preset", field="presets")
    return presets


def generate(out_dir: str = None, path=None) -> List[str]:
    """Escreve todos os presets em out_dir; devolve os caminhos em ordem de nome."""
    out_dir = out_dir or SETTINGS.out_dir
    written = []
    for name, spec in sorted(load_presets(path).items()):
        ext, content = build_preset(name, spec)
        target = os.path.join(out_dir, f"{name}.{ext}")
        if ext == "json":
            write_json(target, content, SETTINGS.decimals)
        else:
            write_text(target, content)
        log.info("[figures] salvo em %s", target)
        written.append(target)
    return written
