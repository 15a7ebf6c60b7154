# common/config/settings.py
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

from common.utils.io import read_yaml_or_json

# config/zic.yaml na raiz do repo (independe do cwd)
CONFIG_PATH = Path(__file__).resolve().parents[2] / "config" / "zic.yaml"


@dataclass(frozen=True)
class Settings:
    # Geometria (feasibility e deduplicação de vértices)
    tol_feasible: float = 1e-9
    tol_dedup: float = 1e-9

    # Maximização em ρ: grade grossa + golden-section
    rho_grid_points: int = 4001
    rho_tol: float = 1e-9

    # Guarda do determinante de Σ_{s,s} (inversão 2x2)
    det_guard: float = 1e-12

    # Enumeração exata dos esquemas: no máximo 2^24 atribuições
    enum_max_bits: int = 24

    # Saída
    decimals: int = 6
    log_level: str = "WARNING"
    out_dir: str = "out"


def load_settings(path: Optional[Path] = None) -> Settings:
    """Defaults do dataclass sobrescritos pelo YAML (se existir). Chaves desconhecidas são ignoradas."""
    p = Path(path) if path is not None else CONFIG_PATH
    if not p.exists():
        return Settings()
    raw: Dict[str, Any] = read_yaml_or_json(str(p)) or {}
    known = {f.name: f.type for f in fields(Settings)}
    overrides = {}
    for k, v in raw.items():
        if k not in known:
            continue
        default = getattr(Settings, k)
        # YAML lê 1e-9 como string em alguns loaders; força o tipo do default
        overrides[k] = type(default)(v)
    return replace(Settings(), **overrides)


SETTINGS = load_settings()
