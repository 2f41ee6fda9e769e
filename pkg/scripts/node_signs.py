"""Where does the largest zero of p_n sit relative to the nodes x_v = v pi/(n+2)?

Prints the sign of p_n at the last nodes and at the half-way points on either
side of x_{n+1}, plus the located zero expressed as z = (n+2)(pi - x*).
"""

from __future__ import annotations

import argparse
import math

from bohr_radius.spectral import find_spectral_root, pn_eval


def sgn(v: float) -> str:
    return "+" if v > 0 else "-" if v < 0 else "0"


def main(degrees: list[int]) -> None:
    print(f"{'n':>6} {'p(y_n)':>7} {'p(x_n+1)':>9} {'p(mid up)':>10} {'p(pi)':>6} {'z*':>10}")
    for n in degrees:
        y_down = ((n + 1) * math.pi - math.pi / 2) / (n + 2)
        x_last = (n + 1) * math.pi / (n + 2)
        y_up = ((n + 1) * math.pi + math.pi / 2) / (n + 2)
        root = find_spectral_root(n).x
        print(
            f"{n:6d} {sgn(pn_eval(n, y_down)):>7} {sgn(pn_eval(n, x_last)):>9} "
            f"{sgn(pn_eval(n, y_up)):>10} {sgn(pn_eval(n, math.pi)):>6} {(n + 2) * (math.pi - root):10.6f}"
        )


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--degrees", type=int, nargs="+", default=[7, 8, 9, 10, 20, 50, 100, 1000])
    main(p.parse_args().degrees)
