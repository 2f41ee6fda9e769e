"""Command-line front end.

Exit codes: 0 success, 1 computation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Sequence

from . import asympt, bohrcheck, solver
from .errors import BohrRadiusError
from .spectral import MIN_SPECTRAL_N
from .toeplitz import DENSE_MAX_N, ToeplitzParams, build_matrix, delta, dense_det

TABLE_COLUMNS = ["n", "radius", "log_residual"]
ASYM_COLUMNS = ["n", "radius", "c", "deviation", "eps"]
DEFAULT_FORMAT = {"radius": "json", "det": "json", "verify": "json", "table": "csv", "asym": "csv"}


class UsageError(Exception):
    pass


def fmt(v: float | int | bool | str | None) -> str:
    """CSV cell text; floats carry 17 significant digits."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, str)):
        return str(v)
    return format(v, ".17g")


def _json_num(v: float | None) -> float | None:
    if v is None or not math.isfinite(v):
        return None
    return v


# ---------------------------------------------------------------- config


@dataclass
class CliConfig:
    subcommand: str
    options: dict[str, Any]
    output_format: str
    cache_path: Path | None = None
    seed: int = 0
    jobs: int = 1
    ns: list[int] = field(default_factory=list)


def _parse_n_list(text: str) -> list[int]:
    try:
        ns = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--n-list expects comma-separated integers, got {text!r}")
    if not ns:
        raise UsageError("--n-list is empty")
    return ns


def _parse_pow2(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return asympt.pow2_grid(int(lo), int(hi))
    except ValueError:
        raise UsageError(f"--n-pow2 expects LO..HI with LO <= HI, got {text!r}")


def _validate(args: argparse.Namespace) -> CliConfig:
    opts = {k: v for k, v in vars(args).items() if k not in ("command", "format", "cache", "seed", "jobs")}
    cfg = CliConfig(
        subcommand=args.command,
        options=opts,
        output_format=args.format or DEFAULT_FORMAT[args.command],
        cache_path=Path(args.cache) if args.cache else None,
        seed=args.seed,
        jobs=args.jobs,
    )
    if cfg.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    tol = opts.get("tol")
    if tol is not None and not tol > 0:
        raise UsageError("--tol must be positive")
    cmd = cfg.subcommand
    if cmd == "radius":
        n = opts["n"]
        if n < 1:
            raise UsageError(f"--n must be >= 1, got {n}")
        if opts["method"] == "spectral" and n < MIN_SPECTRAL_N:
            raise UsageError(
                f"--method spectral needs n >= {MIN_SPECTRAL_N}; use --method direct"
            )
    elif cmd == "det":
        if opts["n"] < 0:
            raise UsageError(f"--n must be >= 0, got {opts['n']}")
        if not 0.0 <= opts["r"] < 1.0:
            raise UsageError(f"--r must lie in [0, 1), got {opts['r']}")
        if opts["dense_check"] and opts["n"] > DENSE_MAX_N:
            raise UsageError(f"--dense-check is limited to n <= {DENSE_MAX_N}")
    elif cmd in ("table", "asym"):
        if opts.get("n_list"):
            cfg.ns = _parse_n_list(opts["n_list"])
        elif opts.get("n_pow2"):
            cfg.ns = _parse_pow2(opts["n_pow2"])
        else:
            raise UsageError(f"{cmd} needs --n-list or --n-pow2")
        if min(cfg.ns) < 2:
            raise UsageError(f"{cmd} needs every n >= 2")
        cfg.ns = sorted(set(cfg.ns))
        if cmd == "asym" and opts["richardson"]:
            if len(cfg.ns) < 2 or any(b != 2 * a for a, b in zip(cfg.ns, cfg.ns[1:])):
                raise UsageError("--richardson needs at least two n values that double")
    elif cmd == "verify":
        if opts["n"] < 1:
            raise UsageError(f"--n must be >= 1, got {opts['n']}")
        if not 0.0 < opts["r"] < 1.0:
            raise UsageError(f"--r must lie in (0, 1), got {opts['r']}")
        if opts["restarts"] < 1:
            raise UsageError("--restarts must be >= 1")
        if opts["samples"] < 4 * (opts["n"] + 1):
            raise UsageError(f"--samples must be >= {4 * (opts['n'] + 1)}")
    if cfg.output_format == "csv" and cmd == "verify":
        raise UsageError("verify only supports --format json")
    return cfg


# ---------------------------------------------------------------- cache


def read_cache(path: Path | None) -> dict[int, tuple[float, float]]:
    """``n -> (radius, tol)`` keeping the tightest tol seen for each n."""
    out: dict[int, tuple[float, float]] = {}
    if path is None or not path.exists():
        return out
    for line in path.read_text().splitlines():
        parts = line.strip().split(",")
        if len(parts) != 3:
            continue
        try:
            n, value, tol = int(parts[0]), float(parts[1]), float(parts[2])
        except ValueError:
            continue
        if n not in out or tol < out[n][1]:
            out[n] = (value, tol)
    return out


def append_cache(path: Path, entries: Sequence[tuple[int, float, float]]) -> None:
    if not entries:
        return
    with path.open("a") as fh:
        for n, value, tol in entries:
            fh.write(f"{n},{fmt(value)},{fmt(tol)}\n")


# ---------------------------------------------------------------- output


def _emit(cfg: CliConfig, out, obj: dict, columns: list[str], rows: list[dict]) -> None:
    if cfg.output_format == "json":
        out.write(json.dumps(obj) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt(row[c]) for c in columns])
    out.write(buf.getvalue())


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------- commands


def _cmd_radius(cfg: CliConfig, out, err) -> int:
    o = cfg.options
    res = solver.radius(o["n"], o["tol"], o["method"])
    method = res.method
    obj = {
        "n": res.n,
        "radius": res.value if res.has_root else 1.0,
        "method": method,
        "root_found": res.has_root,
        "iterations": res.iterations,
        "log_residual": _json_num(res.residual),
        "bracket": None
        if res.bracket_used is None
        else [res.bracket_used.lo, res.bracket_used.hi],
        "angle": res.angle,
        "tol": o["tol"],
    }
    if res.note:
        obj["note"] = res.note
    row = {"n": res.n, "radius": obj["radius"], "method": method, "log_residual": res.residual}
    _emit(cfg, out, obj, ["n", "radius", "method", "log_residual"], [row])
    return 0


def _cmd_det(cfg: CliConfig, out, err) -> int:
    o = cfg.options
    d = delta(ToeplitzParams(o["n"], o["r"]))
    obj = {
        "n": o["n"],
        "r": o["r"],
        "det": d.value,
        "sign": d.sign,
        "log_abs_det": _json_num(d.log_mag),
    }
    status = 0
    if o["dense_check"]:
        dense = dense_det(build_matrix(ToeplitzParams(o["n"], o["r"])))
        agree = abs(dense - d.value) <= 1e-9 * max(1.0, abs(dense))
        obj["dense_det"] = dense
        obj["dense_agrees"] = agree
        if not agree:
            print(f"dense determinant {dense!r} disagrees with recurrence {d.value!r}", file=err)
            status = 1
    _emit(cfg, out, obj, list(obj), [obj])
    return status


def _table_row(args: tuple[int, float]) -> float:
    n, tol = args
    return solver.radius(n, tol).value


def _cmd_table(cfg: CliConfig, out, err) -> int:
    tol = cfg.options["tol"]
    cache = read_cache(cfg.cache_path)
    todo = [n for n in cfg.ns if not (n in cache and cache[n][1] <= tol)]
    fresh = dict(zip(todo, _map(_table_row, [(n, tol) for n in todo], cfg.jobs)))
    if cfg.cache_path is not None:
        append_cache(cfg.cache_path, [(n, fresh[n], tol) for n in todo])
    rows = []
    for n in cfg.ns:
        value = fresh[n] if n in fresh else cache[n][0]
        rows.append({"n": n, "radius": value, "log_residual": delta(ToeplitzParams(n, value)).log_mag})
    obj = {"columns": TABLE_COLUMNS, "rows": [[r[c] for c in TABLE_COLUMNS] for r in rows]}
    _emit(cfg, out, obj, TABLE_COLUMNS, rows)
    return 0


def _asym_row(args: tuple[int, float]) -> asympt.AsymRow:
    n, tol = args
    return asympt.asym_row(n, tol)


def _cmd_asym(cfg: CliConfig, out, err) -> int:
    o = cfg.options
    rows = _map(_asym_row, [(n, o["tol"]) for n in cfg.ns], cfg.jobs)
    dicts = [{c: getattr(r, c) for c in ASYM_COLUMNS} for r in rows]
    extra = None
    if o["richardson"]:
        ext = asympt.richardson(rows, o["order"])
        extra = {
            "estimate": ext.estimate,
            "order_assumed": ext.order_assumed,
            "limit": asympt.LIMIT,
            "error": ext.estimate - asympt.LIMIT,
        }
    if cfg.output_format == "json":
        obj = {"columns": ASYM_COLUMNS, "rows": [[d[c] for c in ASYM_COLUMNS] for d in dicts]}
        if extra is not None:
            obj["richardson"] = extra
        _emit(cfg, out, obj, ASYM_COLUMNS, dicts)
    else:
        _emit(cfg, out, {}, ASYM_COLUMNS, dicts)
        if extra is not None:
            out.write(
                f"# richardson order={extra['order_assumed']} estimate={fmt(extra['estimate'])} "
                f"limit={fmt(extra['limit'])} error={fmt(extra['error'])}\n"
            )
    return 0


def _witness_json(w: bohrcheck.BohrWitness | None) -> dict | None:
    if w is None:
        return None
    return {
        "coeffs": [[c.real, c.imag] for c in w.poly.coeffs],
        "majorant": w.majorant,
        "supnorm": w.supnorm,
        "gap": w.gap,
    }


def _cmd_verify(cfg: CliConfig, out, err) -> int:
    o = cfg.options
    n, r = o["n"], o["r"]
    modes = ("real", "complex") if o["mode"] == "auto" else (o["mode"],)
    w = bohrcheck.find_violation(n, r, o["restarts"], cfg.seed, o["samples"], modes)
    res = solver.radius(n)
    radius = res.value if res.has_root else 1.0
    expected = r > radius
    obj = {
        "n": n,
        "r": r,
        "radius": radius,
        "seed": cfg.seed,
        "restarts": o["restarts"],
        "samples": o["samples"],
        "modes": list(modes),
        "violation_expected": expected,
        "witness": _witness_json(w),
        "consistent": (w is not None) == expected,
    }
    _emit(cfg, out, obj, [], [])
    if w is not None and not expected:
        print(
            f"witness with gap {w.gap:.3g} found below the computed radius {radius!r}",
            file=err,
        )
        return 1
    return 0


COMMANDS = {
    "radius": _cmd_radius,
    "det": _cmd_det,
    "table": _cmd_table,
    "asym": _cmd_asym,
    "verify": _cmd_verify,
}


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default=None)
    common.add_argument("--cache", default=None, help="append-only n,radius,tol cache file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for table/asym")

    parser = _Parser(prog="bohr-radius", description="Bohr radius of degree-n polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("radius", parents=[common], help="compute R_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["direct", "spectral", "both"], default="both")
    p.add_argument("--tol", type=float, default=solver.DEFAULT_TOL)

    p = sub.add_parser("det", parents=[common], help="evaluate Delta_n(r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--dense-check", action="store_true")

    for name, helptext in (("table", "R_n for many n"), ("asym", "n^2 (R_n - 1/3) table")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        grid = p.add_mutually_exclusive_group()
        grid.add_argument("--n-list", help="comma-separated degrees")
        grid.add_argument("--n-pow2", help="LO..HI for n = 2**LO .. 2**HI")
        p.add_argument("--tol", type=float, default=solver.DEFAULT_TOL)
        if name == "asym":
            p.add_argument("--richardson", action="store_true")
            p.add_argument("--order", type=int, choices=[1, 2], default=1)

    p = sub.add_parser("verify", parents=[common], help="search for Bohr-inequality violators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--samples", type=int, default=bohrcheck.DEFAULT_SAMPLES)
    p.add_argument("--mode", choices=["real", "complex", "auto"], default="auto")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _validate(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 2
    try:
        return COMMANDS[cfg.subcommand](cfg, out, err)
    except BohrRadiusError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
