"""
interfaces/cli/main.py
----------------------
Linha de comando: `python -m interfaces.cli <subcomando> ...`

Subcomandos:
- det-region      -m -n -C                região externa determinística
- gauss-region    --snr/--inr | --snr-db/--inr-db | --power/--hd/--hc,
                  --cg, --theorems 4,5,6, --best
- verify-scheme   FILE                    verificação exata de um esquema
- corner-schemes  -m -n                   esquemas de canto A e B (C = 0)
- correspond      -m -n -C                lacunas Gaussiano vs determinístico
- sweep           (params Gaussianos), --cg-range 0:3:0.5, --theorems
- figures         --out-dir               regenera todos os presets

Comuns: --format json|csv, --out PATH (default stdout), -v/-vv.

Exit codes: 0 ok; 2 erro de uso/validação (ParameterError, ResourceError,
argparse); 1 erro numérico interno (NumericError, GeometryError). O
diagnóstico vai para stderr numa linha e nomeia a flag ou a linha do arquivo.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

from common.config.settings import SETTINGS
from common.errors import (
    GeometryError, NumericError, ParameterError, ResourceError,
)
from common.utils.io import dumps_canonical, records_to_csv, write_text
from interfaces.reporting import documents as docs
from interfaces.reporting.figures import generate
from models.deterministic.channel import DetParams
from models.gaussian.regions import GaussParams

log = logging.getLogger("cli")

PROG = "zic"
FORMATS = ("json", "csv")

# nome do campo (ParameterError.field) -> flag mostrada no diagnóstico
FLAG_FOR_FIELD = {
    "m": "-m",
    "n": "-n",
    "c": "-C",
    "snr": "--snr",
    "inr": "--inr",
    "cg": "--cg",
    "theorems": "--theorems",
    "cg_range": "--cg-range",
    "power": "--power",
    "hd": "--hd",
    "hc": "--hc",
}


@dataclass(frozen=True)
class CommandSpec:
    name: str
    args: Dict[str, Any] = field(default_factory=dict)
    fmt: str = "json"
    out: Optional[str] = None


# ---------------------------------- parser -------------------------------------

def db_to_linear(db: float) -> float:
    return 10 ** (db / 10)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", default=None, help="arquivo de saída (default: stdout)")
    p.add_argument("-v", "--verbose", action="count", default=0)


def _det_flags(p: argparse.ArgumentParser, with_c: bool = True) -> None:
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    if with_c:
        p.add_argument("-C", dest="c", type=int, default=0)


def _gauss_flags(p: argparse.ArgumentParser, with_cg: bool = True) -> None:
    p.add_argument("--snr", type=float)
    p.add_argument("--inr", type=float)
    p.add_argument("--snr-db", type=float)
    p.add_argument("--inr-db", type=float)
    p.add_argument("--power", type=float)
    p.add_argument("--hd", type=float)
    p.add_argument("--hc", type=float)
    if with_cg:
        p.add_argument("--cg", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Secrecy outer bounds for the Z interference channel with cooperation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det-region", help="outer region of the deterministic model")
    _det_flags(p)
    _common(p)

    p = sub.add_parser("gauss-region", help="Gaussian outer bounds (theorems 4, 5, 6)")
    _gauss_flags(p)
    p.add_argument("--theorems", default="4,5,6")
    p.add_argument("--best", action="store_true", help="also emit the intersection of applicable bounds")
    _common(p)

    p = sub.add_parser("verify-scheme", help="exact leakage/decodability of a scheme file")
    p.add_argument("file", metavar="FILE")
    _common(p)

    p = sub.add_parser("corner-schemes", help="corner schemes A and B at C = 0")
    _det_flags(p, with_c=False)
    _common(p)

    p = sub.add_parser("correspond", help="high-SNR gaps between Gaussian and deterministic bounds")
    _det_flags(p)
    _common(p)

    p = sub.add_parser("sweep", help="bounds over a range of cooperation rates")
    _gauss_flags(p, with_cg=False)
    p.add_argument("--cg-range", default="0:3:0.5", help="start:stop:step (inclusive)")
    p.add_argument("--theorems", default="4,5,6")
    _common(p)

    p = sub.add_parser("figures", help="regenerate every preset of config/figures.yaml")
    p.add_argument("--out-dir", default=SETTINGS.out_dir)
    p.add_argument("--config", default=None, help="presets file (default: config/figures.yaml)")
    p.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def _gauss_values(ns: argparse.Namespace) -> Dict[str, float]:
    """Exatamente uma forma de entrada: linear, dB ou (P, h_d, h_c). dB só é convertido aqui."""
    if ns.power is not None or ns.hd is not None or ns.hc is not None:
        for name in ("power", "hd", "hc"):
            if getattr(ns, name) is None:
                raise ParameterError("--power, --hd and --hc go together", field=name)
        if any(v is not None for v in (ns.snr, ns.inr, ns.snr_db, ns.inr_db)):
            raise ParameterError("give either --power/--hd/--hc or SNR/INR", field="power")
        if ns.power < 0:
            raise ParameterError("power must be ≥ 0", field="power")
        return {"snr": ns.hd * ns.hd * ns.power, "inr": ns.hc * ns.hc * ns.power}

    out = {}
    for name in ("snr", "inr"):
        lin, db = getattr(ns, name), getattr(ns, f"{name}_db")
        if lin is not None and db is not None:
            raise ParameterError(f"give either --{name} or --{name}-db", field=name)
        if lin is None and db is None:
            raise ParameterError(f"--{name} (or --{name}-db) is required", field=name)
        out[name] = lin if lin is not None else db_to_linear(db)
    return out


def parse(argv: Sequence[str]) -> CommandSpec:
    """argv -> CommandSpec já validado (nenhuma conta pesada acontece antes daqui terminar)."""
    ns = build_parser().parse_args(list(argv))
    name = ns.command
    args: Dict[str, Any] = {"verbose": ns.verbose}

    if name in ("det-region", "correspond"):
        args["params"] = DetParams(ns.m, ns.n, ns.c).check()
    elif name == "corner-schemes":
        args["params"] = DetParams(ns.m, ns.n, 0).check()
    elif name == "gauss-region":
        vals = _gauss_values(ns)
        args["params"] = GaussParams(vals["snr"], vals["inr"], ns.cg)
        args["theorems"] = docs.parse_theorems(ns.theorems)
        args["best"] = ns.best
    elif name == "sweep":
        vals = _gauss_values(ns)
        args["params"] = GaussParams(vals["snr"], vals["inr"], 0.0)
        args["cg_values"] = docs.parse_cg_range(ns.cg_range)
        args["theorems"] = docs.parse_theorems(ns.theorems)
    elif name == "verify-scheme":
        args["file"] = ns.file
    elif name == "figures":
        args["out_dir"] = ns.out_dir
        args["config"] = ns.config
        return CommandSpec(name, args)

    return CommandSpec(name, args, ns.format, ns.out)


# --------------------------------- execução ------------------------------------

def _read_scheme_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise ParameterError(f"cannot read scheme file: {e.strerror or e}", field="file")


def execute(spec: CommandSpec) -> str:
    """Roda o subcomando e devolve o texto a emitir."""
    a = spec.args
    csv = spec.fmt == "csv"
    dec = SETTINGS.decimals

    if spec.name == "det-region":
        if csv:
            return records_to_csv(docs.det_region_records(a["params"]), docs.VERTEX_COLUMNS, dec)
        doc = docs.det_region_doc(a["params"])
    elif spec.name == "gauss-region":
        if csv:
            return records_to_csv(docs.gauss_bound_records(a["params"], a["theorems"], a["best"]),
                                  docs.BOUND_COLUMNS, dec)
        doc = docs.gauss_region_doc(a["params"], a["theorems"], a["best"])
    elif spec.name == "verify-scheme":
        doc = docs.verify_scheme_doc(_read_scheme_file(a["file"]))
        if csv:
            return records_to_csv(docs.verify_scheme_records(doc), docs.SCHEME_COLUMNS, dec)
    elif spec.name == "corner-schemes":
        doc = docs.corner_schemes_doc(a["params"])
        if csv:
            return records_to_csv(docs.corner_schemes_records(doc), docs.SCHEME_COLUMNS, dec)
    elif spec.name == "correspond":
        doc = docs.correspond_doc(a["params"])
        if csv:
            return records_to_csv(docs.correspond_records(doc), docs.GAP_COLUMNS, dec)
    elif spec.name == "sweep":
        g = a["params"]
        if csv:
            return records_to_csv(docs.sweep_records(g.snr, g.inr, a["cg_values"], a["theorems"]),
                                  docs.SWEEP_COLUMNS, dec)
        doc = docs.sweep_doc(g.snr, g.inr, a["cg_values"], a["theorems"])
    elif spec.name == "figures":
        doc = {"written": generate(a["out_dir"], a["config"])}
    else:  # pragma: no cover
        raise AssertionError(spec.name)
    return dumps_canonical(doc, dec)


def _flag(e: ParameterError, argv: Sequence[str]) -> Optional[str]:
    flag = FLAG_FOR_FIELD.get(e.field or "")
    if flag in ("--snr", "--inr") and f"{flag}-db" in argv:
        flag += "-db"
    return flag


def _diagnostic(command: str, e: Exception, argv: Sequence[str], spec: Optional[CommandSpec]) -> str:
    if isinstance(e, ParameterError) and spec is not None and spec.name == "verify-scheme":
        # tudo vem do arquivo: erro de parse, de leitura ou de largura (m, n)
        where = spec.args.get("file")
    elif isinstance(e, ParameterError):
        where = _flag(e, argv)
    else:
        where = None
    msg = f"{where}: {e}" if where else str(e)
    return f"{PROG} {command}: error: {msg}"


def _configure_logging(verbose: int) -> None:
    level = {0: SETTINGS.log_level, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, format="[%(name)s] %(message)s", stream=sys.stderr)


def run(argv: Sequence[str] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    command = argv[0] if argv else ""
    spec: Optional[CommandSpec] = None
    try:
        spec = parse(argv)
        _configure_logging(spec.args.get("verbose", 0))
        log.info("%s %s", spec.name, " ".join(argv[1:]))
        text = execute(spec)
    except SystemExit as e:
        # argparse já escreveu o uso/erro em stderr
        return e.code if isinstance(e.code, int) else 2
    except (ParameterError, ResourceError) as e:
        print(_diagnostic(spec.name if spec else command, e, argv, spec), file=sys.stderr)
        return 2
    except (NumericError, GeometryError) as e:
        print(_diagnostic(spec.name if spec else command, e, argv, spec), file=sys.stderr)
        return 1

    if spec.out:
        write_text(spec.out, text)
        log.info("salvo em %s", spec.out)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
