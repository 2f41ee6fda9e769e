"""Convergence table for n^2 (R_n - 1/3) with a Richardson estimate.

    python scripts/asymptotic_table.py --lo 4 --hi 14 --out asym.csv
"""

from __future__ import annotations

import argparse
import csv
import time
from dataclasses import dataclass

from bohr_radius.asympt import LIMIT, asym_table, pow2_grid, richardson


@dataclass
class Config:
    lo: int = 4
    hi: int = 12
    order: int = 1
    out: str | None = None


def main(cfg: Config) -> None:
    t0 = time.perf_counter()
    rows = asym_table(pow2_grid(cfg.lo, cfg.hi))
    print(f"{'n':>7} {'R_n':>20} {'c_n':>18} {'c_n - pi^2/3':>14} {'eps_n':>12}")
    for r in rows:
        eps = "" if r.eps is None else f"{r.eps:12.4e}"
        print(f"{r.n:7d} {r.radius:20.17f} {r.c:18.15f} {r.deviation:14.6e} {eps}")
    for a, b in zip(rows, rows[1:]):
        est = richardson([a, b], cfg.order).estimate
        print(f"richardson({a.n}, {b.n}) = {est:.12f}  error {est - LIMIT:+.3e}")
    print(f"{time.perf_counter() - t0:.2f}s")
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "radius", "c", "deviation", "eps"])
            for r in rows:
                w.writerow([r.n, f"{r.radius:.17g}", f"{r.c:.17g}", f"{r.deviation:.17g}",
                            "" if r.eps is None else f"{r.eps:.17g}"])


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--lo", type=int, default=Config.lo)
    p.add_argument("--hi", type=int, default=Config.hi)
    p.add_argument("--order", type=int, default=Config.order, choices=[1, 2])
    p.add_argument("--out")
    main(Config(**vars(p.parse_args())))
