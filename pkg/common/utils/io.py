# common/utils/io.py
import json, math, os
from typing import Any, Dict, Iterable, List, Mapping

import pandas as pd


def read_yaml_or_json(path: str) -> Dict[str, Any]:
    """Reads YAML if available, otherwise JSON. Falls back to JSON on parse error."""
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    # Try YAML
    try:
        import yaml  # type: ignore
        with open(path, 'r', encoding='utf-8') as f:
            return yaml.safe_load(f)
    except Exception:
        # Fallback to JSON
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)


def read_json(path: str):
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


# -----------------------------------------------------------------------------
# JSON canônico: chaves ordenadas, indent 2, floats com casas fixas.
# Reparsear e reemitir dá os mesmos bytes (floats viram "5.000000" e voltam).
# -----------------------------------------------------------------------------

def fixed(x: float, decimals: int = 6) -> str:
    if not math.isfinite(x):
        raise ValueError(f"valor não finito na saída: {x!r}")
    s = f"{x:.{decimals}f}"
    # -0.000000 -> 0.000000
    if s.lstrip("-").strip("0.") == "":
        s = s.lstrip("-")
    return s


def _emit(obj: Any, decimals: int, depth: int) -> str:
    pad = "  " * (depth + 1)
    end = "  " * depth
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fixed(obj, decimals)
    if isinstance(obj, Mapping):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_emit(obj[k], decimals, depth + 1)}"
                 for k in sorted(obj, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        # listas de escalares (ex.: vértice [r1, r2]) ficam numa linha só
        if all(isinstance(v, (int, float, bool, str)) or v is None for v in obj):
            return "[" + ", ".join(_emit(v, decimals, depth + 1) for v in obj) + "]"
        items = [pad + _emit(v, decimals, depth + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    # numpy escalares e Fraction caem aqui
    if hasattr(obj, "__float__"):
        return fixed(float(obj), decimals)
    raise TypeError(f"tipo não serializável: {type(obj).__name__}")


def dumps_canonical(obj: Any, decimals: int = 6) -> str:
    return _emit(obj, decimals, 0) + "\n"


def write_json(path: str, obj: Any, decimals: int = 6) -> None:
    d = os.path.dirname(path)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline="\n") as f:
        f.write(dumps_canonical(obj, decimals))


# -----------------------------------------------------------------------------
# CSV via pandas (float_format fixo => bytes determinísticos)
# -----------------------------------------------------------------------------

def _clean_float(v: Any, decimals: int) -> Any:
    if isinstance(v, float) and abs(v) < 0.5 * 10 ** (-decimals):
        return 0.0
    return v


def records_to_csv(records: Iterable[Mapping[str, Any]], columns: List[str], decimals: int = 6) -> str:
    rows = [{k: _clean_float(r.get(k), decimals) for k in columns} for r in records]
    df = pd.DataFrame(rows, columns=columns)
    return df.to_csv(index=False, float_format=f"%.{decimals}f", lineterminator="\n")


def write_text(path: str, text: str) -> None:
    d = os.path.dirname(path)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline="\n") as f:
        f.write(text)
