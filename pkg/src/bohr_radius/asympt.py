"""Convergence of c_n = n^2 (R_n - 1/3) to pi^2/3."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .solver import DEFAULT_TOL, radius

BOHR_CONSTANT = 1.0 / 3.0
LIMIT = 3.2898681336964528  # pi**2 / 3


@dataclass(frozen=True)
class AsymRow:
    """One row of the convergence table.

    ``eps`` is ``(n + 2) * theta - pi`` with ``theta = pi - x*`` taken from the
    spectral root; it is ``None`` below n = 7 where only the direct route runs.
    """

    n: int
    radius: float
    c: float
    deviation: float
    theta: float | None = None
    eps: float | None = None


@dataclass(frozen=True)
class ExtrapolationResult:
    estimate: float
    samples: list[tuple[int, float]]
    order_assumed: int


def asym_row(n: int, tol: float = DEFAULT_TOL) -> AsymRow:
    if n < 2:
        raise ValueError(f"asym_row needs n >= 2, got {n}")
    res = radius(n, tol)
    c = n * n * (res.value - BOHR_CONSTANT)
    theta = eps = None
    if res.angle is not None:
        theta = math.pi - res.angle
        eps = (n + 2) * theta - math.pi
    return AsymRow(n=n, radius=res.value, c=c, deviation=c - LIMIT, theta=theta, eps=eps)


def asym_table(ns: Sequence[int], tol: float = DEFAULT_TOL) -> list[AsymRow]:
    if not ns:
        raise ValueError("ns must be non-empty")
    return [asym_row(n, tol) for n in ns]


def pow2_grid(lo: int, hi: int) -> list[int]:
    """``[2**lo, ..., 2**hi]``."""
    if lo > hi:
        raise ValueError(f"empty power-of-two range {lo}..{hi}")
    return [2**k for k in range(lo, hi + 1)]


def richardson(rows: Sequence[AsymRow], order: int = 1) -> ExtrapolationResult:
    """Eliminate an assumed ``b / n**order`` term from ``c_n``.

    Consecutive rows must double in ``n``.  Each pair gives
    ``(2**order * c_2n - c_n) / (2**order - 1)``; the pair estimates are
    averaged.
    """
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order}")
    if len(rows) < 2:
        raise ValueError("richardson needs at least two rows")
    rows = sorted(rows, key=lambda row: row.n)
    for a, b in zip(rows, rows[1:]):
        if b.n != 2 * a.n:
            raise ValueError(f"rows must double in n, got {a.n} then {b.n}")
    w = 2**order
    pairs = [(w * b.c - a.c) / (w - 1) for a, b in zip(rows, rows[1:])]
    return ExtrapolationResult(
        estimate=sum(pairs) / len(pairs),
        samples=[(row.n, row.c) for row in rows],
        order_assumed=order,
    )
