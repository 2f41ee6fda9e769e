"""The Toeplitz family T_n(r) and its determinant Delta_n(r).

``T_n(r)`` is the symmetric ``(n+1) x (n+1)`` Toeplitz matrix with first row
``(1, r, -r**2, r**3, ..., (-1)**(n-1) r**n)``.  Its determinant satisfies the
three-term recurrence

    Delta_k = (3 r**2 + 1) Delta_{k-1} - 4 r**2 Delta_{k-2},
    Delta_{-1} = Delta_0 = 1,

which is the workhorse here.  Near ``r = 1/3`` the determinant behaves like
``(2/3)**n``, so for large ``n`` the recurrence is run in a rescaled form and
the result is carried as ``(sign, log|Delta|)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

RESCALE_LIMIT = 1e150
DENSE_MAX_N = 64


@dataclass(frozen=True)
class ToeplitzParams:
    n: int
    r: float

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n!r}")
        if not 0.0 <= self.r < 1.0:
            raise ValueError(f"r must lie in [0, 1), got {self.r!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "r", float(self.r))


@dataclass(frozen=True)
class ToeplitzMatrix:
    size: int
    entries: np.ndarray


@dataclass(frozen=True)
class ScaledDet:
    """Determinant value as ``sign * exp(log_mag)``.

    ``raw`` holds the plain float when the recurrence never had to rescale.
    """

    sign: int
    log_mag: float
    raw: float | None = None

    @property
    def value(self) -> float:
        if self.raw is not None:
            return self.raw
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_mag)


def symbol_coefficients(n: int, r: float) -> np.ndarray:
    """Return ``c_0..c_n`` with ``c_0 = 1`` and ``c_k = (-1)**(k-1) r**k``."""
    k = np.arange(n + 1)
    c = -((-r) ** k)
    c[0] = 1.0
    return c


def build_matrix(p: ToeplitzParams) -> ToeplitzMatrix:
    c = symbol_coefficients(p.n, p.r)
    idx = np.arange(p.n + 1)
    entries = c[np.abs(idx[:, None] - idx[None, :])]
    return ToeplitzMatrix(size=p.n + 1, entries=entries)


def dense_det(m: ToeplitzMatrix) -> float:
    """Determinant by Gaussian elimination with partial pivoting.

    Only meant as a cross-check on :func:`delta`, hence the size cap.
    """
    if m.size - 1 > DENSE_MAX_N:
        raise ValueError(f"dense path is limited to n <= {DENSE_MAX_N}")
    a = np.array(m.entries, dtype=float)
    size = a.shape[0]
    det = 1.0
    for col in range(size):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if a[piv, col] == 0.0:
            return 0.0
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        det *= a[col, col]
        below = a[col + 1 :, col] / a[col, col]
        a[col + 1 :, col:] -= np.outer(below, a[col, col:])
    return float(det)


def _sign(v: float) -> int:
    return int(v > 0) - int(v < 0)


def delta(p: ToeplitzParams, rescale_limit: float = RESCALE_LIMIT) -> ScaledDet:
    """Evaluate ``Delta_n(r)`` with the three-term recurrence.

    The working pair ``(Delta_{k-1}, Delta_k)`` is divided by its larger
    magnitude whenever that magnitude leaves ``[1/rescale_limit,
    rescale_limit]``; the logs of the divisors are accumulated.  Passing
    ``rescale_limit=1.0`` forces a rescale at nearly every step.
    """
    if rescale_limit < 1.0:
        raise ValueError("rescale_limit must be >= 1")
    r2 = p.r * p.r
    a = 3.0 * r2 + 1.0
    b = 4.0 * r2
    hi = rescale_limit
    lo = 1.0 / rescale_limit
    prev, cur = 1.0, 1.0
    log_scale = 0.0
    rescaled = False
    for _ in range(p.n):
        prev, cur = cur, a * cur - b * prev
        m = abs(cur)
        if m > hi or m < lo:
            m = max(m, abs(prev))
            if m > hi or 0.0 < m < lo:
                prev /= m
                cur /= m
                log_scale += math.log(m)
                rescaled = True
    s = _sign(cur)
    log_mag = math.log(abs(cur)) + log_scale if s else -math.inf
    return ScaledDet(sign=s, log_mag=log_mag, raw=None if rescaled else cur)


def delta_many(
    n: int, rs: Sequence[float] | np.ndarray, rescale_limit: float = RESCALE_LIMIT
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`delta` over many ``r``; returns ``(signs, log_mags)``."""
    rs = np.asarray(rs, dtype=float)
    if rs.size and (rs.min() < 0.0 or rs.max() >= 1.0):
        raise ValueError("every r must lie in [0, 1)")
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    r2 = rs * rs
    a = 3.0 * r2 + 1.0
    b = 4.0 * r2
    prev = np.ones_like(rs)
    cur = np.ones_like(rs)
    log_scale = np.zeros_like(rs)
    hi = rescale_limit
    lo = 1.0 / rescale_limit
    for _ in range(n):
        prev, cur = cur, a * cur - b * prev
        m = np.maximum(np.abs(cur), np.abs(prev))
        out = (m > hi) | ((m < lo) & (m > 0.0))
        if out.any():
            mo = m[out]
            prev[out] /= mo
            cur[out] /= mo
            log_scale[out] += np.log(mo)
    signs = np.sign(cur).astype(int)
    with np.errstate(divide="ignore"):
        log_mags = np.log(np.abs(cur)) + log_scale
    return signs, log_mags


def delta_sign_profile(
    n: int, rs: Sequence[float], zero_tol: float = 0.0
) -> list[int]:
    """Sign of ``Delta_n`` at each grid point.

    Values with ``|Delta_n| <= zero_tol`` are reported as 0.
    """
    signs, log_mags = delta_many(n, rs)
    if zero_tol > 0.0:
        signs = np.where(log_mags <= math.log(zero_tol), 0, signs)
    return [int(s) for s in signs]
