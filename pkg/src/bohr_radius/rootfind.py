"""Sign-based bisection shared by the direct and spectral solvers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import BracketSignError, ConvergenceError

MAX_ITER = 200


@dataclass(frozen=True)
class RootBracket:
    """Interval ``(lo, hi)`` with the signs of the target function at its ends."""

    lo: float
    hi: float
    sign_lo: int
    sign_hi: int

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"bracket needs lo < hi, got ({self.lo}, {self.hi})")
        if self.sign_lo * self.sign_hi != -1:
            raise BracketSignError(
                f"endpoint signs {self.sign_lo}, {self.sign_hi} on "
                f"({self.lo!r}, {self.hi!r}) do not differ"
            )

    @property
    def width(self) -> float:
        return self.hi - self.lo


def bisect_sign(
    sign: Callable[[float], int],
    bracket: RootBracket,
    tol: float,
    max_iter: int = MAX_ITER,
) -> tuple[float, float, float, int]:
    """Shrink ``bracket`` by bisection on ``sign`` until its width is ``<= tol``.

    Returns ``(lo, hi, midpoint, iterations)``. An exact zero of ``sign`` at a
    midpoint ends the search early. Once ``lo`` and ``hi`` are adjacent floats
    the interval cannot shrink further and is accepted as converged.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi, s_lo = bracket.lo, bracket.hi, bracket.sign_lo
    it = 0
    while hi - lo > tol:
        if it >= max_iter:
            raise ConvergenceError(
                f"bisection did not reach width {tol:g} in {max_iter} iterations"
            )
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        it += 1
        s = sign(mid)
        if s == 0:
            return mid, mid, mid, it
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi, 0.5 * (lo + hi), it
