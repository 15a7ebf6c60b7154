# run_validate.py
# Confere os dados regenerados em out/ (python -m interfaces.cli figures)
# contra os valores de referência calculados à mão pelas fórmulas fechadas.
import os, json, sys, datetime
from typing import Any, Dict, List

import pandas as pd

from common.utils.io import read_json

OUT = "out"
VAL_JSON = "out/validation.json"
VAL_LOG = "out/validation.log"

# Referências (bits por uso do canal) e tolerâncias
GAUSS_MODERATE = {  # SNR = 100, INR = 25, C_G = 0
    ("thm4", "sum"): 5.0486,
    ("thm5", "sum"): 4.3080,
    ("thm5", "r2"): 3.1712,
    ("thm6", "sum"): 4.864,
}
TOL_SPOT = 1e-2
THM6_R2_HIGH = 2.760      # SNR = 100, INR = 225, C_G = 1
RHO_R2_HIGH = -0.673
TOL_R2_HIGH = 5e-3
TOL_RHO = 1e-2
EPS = 1e-9


def bound(region: Dict[str, Any], kind: str) -> float:
    """Menor b entre as restrições do tipo (r1: a2 = 0, r2: a1 = 0, sum: a1 = a2 > 0)."""
    bs = []
    for c in region["constraints"]:
        a1, a2 = c["a1"], c["a2"]
        k = "r1" if a2 == 0 else "r2" if a1 == 0 else "sum" if a1 == a2 else "general"
        if k == kind:
            bs.append(c["b"])
    return min(bs) if bs else float("inf")


def vertex_set(region: Dict[str, Any]) -> set:
    return {(round(v[0], 6), round(v[1], 6)) for v in region["vertices"]}


def load(name: str, errors: List[str]):
    path = os.path.join(OUT, name)
    if not os.path.exists(path):
        errors.append(f"Arquivo não encontrado: {path} (rode python -m interfaces.cli figures)")
        return None
    try:
        return pd.read_csv(path) if path.endswith(".csv") else read_json(path)
    except Exception as e:
        errors.append(f"Erro lendo {path}: {e}")
        return None


def check_det(errors: List[str], notes: List[str]) -> None:
    doc = load("det_moderate_m5n3.json", errors)
    if doc is not None:
        for region in doc["regions"]:
            c = region["params"]["c"]
            top = min(2 + c, 5)
            vs = vertex_set(region)
            if (5.0, float(top)) not in vs or (float(top), 5.0) not in vs:
                errors.append(f"(5,3,C={c}): cantos ({5},{top}) e ({top},{5}) ausentes em {sorted(vs)}")
            elif c >= 3 and vs != {(0.0, 0.0), (5.0, 0.0), (5.0, 5.0), (0.0, 5.0)}:
                errors.append(f"(5,3,C={c}): esperado o quadrado [0,5]², obtido {sorted(vs)}")
            else:
                notes.append(f"(5,3,C={c}): cantos (5,{top}) e ({top},5) ok.")

    doc = load("det_high_m4n5.json", errors)
    if doc is not None:
        for region in doc["regions"]:
            c = region["params"]["c"]
            got = (bound(region, "r1"), bound(region, "r2"), bound(region, "sum"))
            want = (4.0, 3.0, 4.0 + c)
            if got != want:
                errors.append(f"(4,5,C={c}): limites {got} != {want}")
            else:
                notes.append(f"(4,5,C={c}): limites {want} ok.")


def check_corners(errors: List[str], notes: List[str]) -> None:
    doc = load("corner_m5n3.json", errors)
    if doc is None:
        return
    want = {"A": (5, 2), "B": (2, 5)}
    for s in doc["schemes"]:
        rep = s["report"]
        rates = (rep["r1"], rep["r2"])
        ok = (rates == want[s["name"]] and rep["leakage_bits"] == 0 and rep["secure"]
              and all(rep["decodable"]) and s["on_outer_boundary"])
        if ok:
            notes.append(f"Esquema {s['name']}: taxas {rates}, vazamento 0, na face da soma.")
        else:
            errors.append(f"Esquema {s['name']}: relatório inesperado {rep} (borda: {s['on_outer_boundary']}).")


def check_gauss(errors: List[str], notes: List[str]) -> None:
    doc = load("gauss_moderate.json", errors)
    if doc is not None:
        for (thm, kind), ref in GAUSS_MODERATE.items():
            got = bound(doc["regions"][thm], kind)
            if abs(got - ref) > TOL_SPOT:
                errors.append(f"{thm} {kind} = {got:.4f}, referência {ref} ± {TOL_SPOT}")
            else:
                notes.append(f"{thm} {kind} = {got:.4f} (referência {ref}).")

    doc = load("gauss_high.json", errors)
    if doc is not None:
        t4, t6 = doc["regions"]["thm4"], doc["regions"]["thm6"]
        r2, rho = bound(t6, "r2"), t6["params"]["rho_r2"]
        if abs(r2 - THM6_R2_HIGH) > TOL_R2_HIGH or abs(rho - RHO_R2_HIGH) > TOL_RHO:
            errors.append(f"thm6 r2 = {r2:.4f} em ρ* = {rho:.4f}, referência {THM6_R2_HIGH} em {RHO_R2_HIGH}")
        else:
            notes.append(f"thm6 r2 = {r2:.4f} em ρ* = {rho:.4f}.")
        if not bound(t6, "sum") < bound(t4, "sum"):
            errors.append("thm6 sum não ficou abaixo de thm4 sum em (100, 225, 1).")


def check_sweeps(errors: List[str], notes: List[str]) -> None:
    for name in ("cg_sweep_moderate.csv", "cg_sweep_high.csv"):
        df = load(name, errors)
        if df is None:
            continue
        sums = df[df["bound"] == "sum"]
        for thm, g in sums.groupby("theorem"):
            vals = g.sort_values("cg")["value"].to_numpy()
            if (vals[1:] < vals[:-1] - EPS).any():
                errors.append(f"{name}: limite de soma do teorema {thm} decresce com C_G: {list(vals)}")
        notes.append(f"{name}: {len(df)} linhas conferidas.")


def check_correspond(errors: List[str], notes: List[str]) -> None:
    doc = load("correspond_m10n6c2.json", errors)
    if doc is None:
        return
    bad = [k for k, ok in doc["within_tolerance"].items() if not ok]
    if bad:
        errors.append(f"Correspondência (10,6,2): fora da tolerância em {bad}")
    else:
        notes.append(f"Correspondência (10,6,2): max_gap = {doc['max_gap']:.6f}.")


def main():
    errors: List[str] = []
    notes: List[str] = []

    for check in (check_det, check_corners, check_gauss, check_sweeps, check_correspond):
        try:
            check(errors, notes)
        except (KeyError, TypeError, ValueError) as e:
            errors.append(f"{check.__name__}: documento com formato inesperado ({e!r})")

    status = "OK" if not errors else "FAIL"

    print("\n========== VALIDAÇÃO DOS DADOS DAS FIGURAS ==========")
    for n in notes:
        print("  -", n)
    print()
    if errors:
        print("❌ Erros:")
        for e in errors:
            print("  -", e)
    else:
        print("✅ Tudo certo! Valores de referência reproduzidos.")

    rec = {
        "timestamp": datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%d %H:%M:%S UTC"),
        "status": status,
        "errors": errors,
        "notes": notes,
    }

    os.makedirs(OUT, exist_ok=True)
    with open(VAL_JSON, "w", encoding="utf-8") as f:
        json.dump(rec, f, ensure_ascii=False, indent=2)
    with open(VAL_LOG, "a", encoding="utf-8") as f:
        f.write(json.dumps(rec, ensure_ascii=False) + "\n")

    sys.exit(0 if status == "OK" else 1)

if __name__ == "__main__":
    main()
