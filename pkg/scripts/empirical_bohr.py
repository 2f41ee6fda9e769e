"""Compare R_n from the determinant with the violation-search bracket.

    python scripts/empirical_bohr.py --degrees 2 3 4 --budget 200
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from bohr_radius.bohrcheck import empirical_radius
from bohr_radius.solver import radius


@dataclass
class Config:
    degrees: list[int] = field(default_factory=lambda: [2, 3, 4])
    budget: int = 200
    seed: int = 0


def main(cfg: Config) -> None:
    for n in cfg.degrees:
        t0 = time.perf_counter()
        rn = radius(n).value
        lo, hi = empirical_radius(n, cfg.budget, cfg.seed)
        inside = hi is not None and lo <= rn <= hi
        print(f"n={n}: R_n={rn:.6f}  search bracket ({lo:.4f}, {hi})  "
              f"{'contains' if inside else 'misses'} R_n  [{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--degrees", type=int, nargs="+", default=[2, 3, 4])
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    main(Config(**vars(p.parse_args())))
