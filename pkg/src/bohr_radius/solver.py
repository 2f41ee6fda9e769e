"""Bohr radius R_n as the smallest root of Delta_n(r) in (0, 1).

Two routes:

* ``radius_direct`` scans the determinant recurrence on an r-grid and bisects
  the first sign change;
* ``radius_spectral`` bisects ``p_n`` in angle space and maps back through
  ``g``.

``radius`` runs both for ``n >= 7`` and refuses to answer if they disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from . import spectral
from .errors import CrossCheckError, DomainError
from .rootfind import RootBracket, bisect_sign
from .toeplitz import ToeplitzParams, delta, delta_many

Method = Literal["direct", "spectral", "both"]

DEFAULT_TOL = 1e-14
SCAN_START = 1.0 / 3.0
SCAN_STOP = 0.60
COARSE_STEP = 1e-3
OUTER_STOP = 0.999
_CHUNK = 512

DEGREE_ONE_NOTE = (
    "Delta_1 = 1 - r^2 has no zero in (0,1): for degree 1, |a0| + |a1| r <= "
    "|a0| + |a1| = ||p||_inf for every r <= 1, so the radius is 1"
)


@dataclass(frozen=True)
class RadiusResult:
    """Outcome of a radius computation.

    ``value`` is ``None`` when Delta_n has no zero in (0, 1).  ``residual`` is
    ``log|Delta_n(value)|``, and ``angle`` is the spectral root ``x*`` when
    the spectral route ran.
    """

    n: int
    value: float | None
    method: Method
    bracket_used: RootBracket | None
    iterations: int
    residual: float | None
    angle: float | None = None
    note: str = ""

    @property
    def has_root(self) -> bool:
        return self.value is not None


def _check(n: int, tol: float) -> None:
    if int(n) != n or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")


def _log_residual(n: int, r: float) -> float:
    return delta(ToeplitzParams(n, r)).log_mag


def scan_step(n: int) -> float:
    return min(COARSE_STEP, math.pi**2 / (4.0 * n * n))


def _grid(start: float, stop: float, step: float):
    """Chunks of the grid ``start, start + step, ...`` ending exactly at ``stop``."""
    count = int(math.floor((stop - start) / step))
    for first in range(0, count + 1, _CHUNK):
        idx = np.arange(first, min(first + _CHUNK, count + 1))
        rs = start + idx * step
        if idx[-1] == count:
            rs[-1] = stop
        yield rs


def _first_sign_change(
    n: int, segments: list[tuple[float, float, float]]
) -> tuple[float, float, int, int] | None:
    """First grid interval, across consecutive segments, where Delta_n changes sign.

    Returns ``(lo, hi, sign_lo, sign_hi)``; a grid point with Delta_n == 0 is
    returned as a degenerate interval with ``lo == hi``.
    """
    prev_r, prev_s = None, None
    for start, stop, step in segments:
        for rs in _grid(start, stop, step):
            signs, _ = delta_many(n, rs)
            for r, s in zip(rs.tolist(), signs.tolist()):
                if s == 0:
                    return r, r, 0, 0
                if prev_s is not None and s != prev_s:
                    return prev_r, r, prev_s, s
                prev_r, prev_s = r, s
    return None


def radius_direct(n: int, tol: float = DEFAULT_TOL) -> RadiusResult:
    """Smallest zero of Delta_n in (0, 1) by grid scan plus bisection.

    Every zero in (0, 1) lies in ``[1/3, sqrt(3)/3]``, so the fine scan covers
    ``[1/3, 0.6]``.  Adjacent zeros near ``R_n`` are about ``pi^2/n^2`` apart;
    the step is a quarter of that.  ``(0, 1/3)`` and ``(0.6, 0.999)`` are swept
    once at step 1e-3 as a safety net.
    """
    _check(n, tol)
    hit = _first_sign_change(
        n,
        [
            (COARSE_STEP, SCAN_START, COARSE_STEP),
            (SCAN_START, SCAN_STOP, scan_step(n)),
            (SCAN_STOP, OUTER_STOP, COARSE_STEP),
        ],
    )
    if hit is None:
        note = DEGREE_ONE_NOTE if n == 1 else "no sign change of Delta_n on (0, 0.999)"
        return RadiusResult(n, None, "direct", None, 0, None, note=note)
    lo, hi, s_lo, s_hi = hit
    if lo == hi:
        return RadiusResult(n, lo, "direct", None, 0, -math.inf)
    br = RootBracket(lo, hi, s_lo, s_hi)
    _, _, r, it = bisect_sign(lambda v: delta(ToeplitzParams(n, v)).sign, br, tol)
    return RadiusResult(n, r, "direct", br, it, _log_residual(n, r))


def radius_spectral(n: int, tol: float = DEFAULT_TOL) -> RadiusResult:
    _check(n, tol)
    if n < spectral.MIN_SPECTRAL_N:
        raise DomainError(
            f"the spectral method needs n >= {spectral.MIN_SPECTRAL_N} (got n={n}); "
            "use method='direct'"
        )
    root = spectral.find_spectral_root(n, tol)
    return RadiusResult(
        n,
        root.r,
        "spectral",
        root.bracket,
        root.iterations,
        _log_residual(n, root.r),
        angle=root.x,
    )


def cross_check_tol(tol: float) -> float:
    return max(1e-10, 10.0 * tol)


def radius(n: int, tol: float = DEFAULT_TOL, method: Method = "both") -> RadiusResult:
    """Dispatch on ``method``; ``both`` falls back to direct below n = 7."""
    _check(n, tol)
    if method == "direct":
        return radius_direct(n, tol)
    if method == "spectral":
        return radius_spectral(n, tol)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    if n < spectral.MIN_SPECTRAL_N:
        return radius_direct(n, tol)
    direct = radius_direct(n, tol)
    spec = radius_spectral(n, tol)
    if direct.value is None or abs(direct.value - spec.value) > cross_check_tol(tol):
        raise CrossCheckError(
            f"direct and spectral radii disagree at n={n}: "
            f"{direct.value!r} vs {spec.value!r}",
            direct.value,
            spec.value,
        )
    return replace(spec, method="both")
