"""Empirical check of the Bohr inequality sum |a_k| r^k <= ||p||_inf.

A witness above ``R_n`` is a polynomial whose majorant series at ``r`` beats
its sup-norm on the unit disk.  Witnesses are searched for by batched
coordinate ascent over normalised coefficient vectors with random restarts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

Mode = Literal["real", "complex"]

VIOLATION_THRESHOLD = 1e-6
DEFAULT_SAMPLES = 512
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_REFINE_PEAKS = 8
_REFINE_WIDTH = 1e-12


@dataclass(frozen=True)
class DiskPolynomial:
    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, np.asarray(self.coeffs))


@dataclass(frozen=True)
class BohrWitness:
    poly: DiskPolynomial
    r: float
    majorant: float
    supnorm: float
    gap: float


def majorant(p: DiskPolynomial, r: float) -> float:
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"r must lie in [0, 1], got {r!r}")
    mods = np.abs(np.asarray(p.coeffs))
    return float(np.sum(mods * r ** np.arange(len(mods))))


def _circle_modulus(coeffs: np.ndarray, theta: float) -> float:
    return abs(np.polynomial.polynomial.polyval(np.exp(1j * theta), coeffs))


def _golden_max(f, a: float, b: float, width: float) -> tuple[float, float]:
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > width:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def supnorm(p: DiskPolynomial, samples: int = DEFAULT_SAMPLES) -> float:
    """Max of ``|p|`` on the unit circle.

    Equispaced sampling locates the peaks of ``|p(e^{it})|``; the best
    ``_REFINE_PEAKS`` local maxima are then polished by golden-section search
    on their neighbouring grid cells.  The result never exceeds the true norm.
    """
    if samples < 4 * (p.degree + 1):
        raise ValueError(f"need at least {4 * (p.degree + 1)} samples, got {samples}")
    coeffs = np.asarray(p.coeffs)
    h = 2.0 * math.pi / samples
    thetas = h * np.arange(samples)
    vals = np.abs(np.fft.ifft(coeffs, samples)) * samples
    peaks = np.flatnonzero((vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1)))
    peaks = peaks[np.argsort(-vals[peaks], kind="stable")][:_REFINE_PEAKS]
    best = float(vals.max())
    for i in peaks:
        _, v = _golden_max(
            lambda t: _circle_modulus(coeffs, t),
            thetas[i] - h,
            thetas[i] + h,
            _REFINE_WIDTH,
        )
        best = max(best, v)
    return float(best)


def bohr_gap(p: DiskPolynomial, r: float, samples: int = DEFAULT_SAMPLES) -> BohrWitness:
    m = majorant(p, r)
    s = supnorm(p, samples)
    return BohrWitness(poly=p, r=r, majorant=m, supnorm=s, gap=m - s)


def _coeffs_from_params(params: np.ndarray, n: int, mode: Mode) -> np.ndarray:
    """Map search coordinates to normalised coefficient rows.

    ``a_0`` and ``a_1`` are real and non-negative: a global phase and the
    rotation ``a_k -> e^{ik alpha} a_k`` change neither side of the inequality.
    """
    if mode == "real":
        a = params.astype(complex)
        a[:, : min(2, n + 1)] = np.abs(a[:, : min(2, n + 1)])
    else:
        mods = np.abs(params[:, : n + 1])
        phases = np.zeros_like(mods)
        phases[:, 2:] = params[:, n + 1 :]
        a = mods * np.exp(1j * phases)
    scale = np.abs(a).max(axis=1, keepdims=True)
    scale[scale == 0.0] = 1.0
    return a / scale


class _BatchGap:
    """Gap of many polynomials at once on a fixed circle grid."""

    def __init__(self, n: int, r: float, samples: int):
        k = np.arange(n + 1)
        theta = 2.0 * math.pi * np.arange(samples) / samples
        self.powers = np.exp(1j * np.outer(k, theta))
        self.weights = r**k

    def __call__(self, a: np.ndarray) -> np.ndarray:
        maj = np.abs(a) @ self.weights
        sup = np.abs(a @ self.powers).max(axis=1)
        return maj - sup


def _initial_params(rng: np.random.Generator, restarts: int, n: int, mode: Mode) -> np.ndarray:
    if mode == "real":
        return rng.uniform(-1.0, 1.0, size=(restarts, n + 1))
    mods = rng.uniform(0.0, 1.0, size=(restarts, n + 1))
    phases = rng.uniform(-math.pi, math.pi, size=(restarts, max(n - 1, 0)))
    return np.hstack([mods, phases])


def _coordinate_ascent(
    gap: _BatchGap,
    params: np.ndarray,
    n: int,
    mode: Mode,
    step0: float = 0.25,
    min_step: float = 1e-7,
    max_sweeps: int = 400,
) -> tuple[np.ndarray, np.ndarray]:
    """Compass search per restart: try +-step on each coordinate, halve on failure."""
    x = params.copy()
    best = gap(_coeffs_from_params(x, n, mode))
    step = np.full(x.shape[0], step0)
    n_mod = n + 1
    for _ in range(max_sweeps):
        rows = np.flatnonzero(step >= min_step)
        if rows.size == 0:
            break
        xa, ba, sa = x[rows], best[rows], step[rows]
        improved = np.zeros(rows.size, dtype=bool)
        for j in range(x.shape[1]):
            scale = math.pi if j >= n_mod else 1.0
            for direction in (1.0, -1.0):
                cand = xa.copy()
                cand[:, j] += direction * scale * sa
                if mode == "complex" and j < n_mod:
                    cand[:, j] = np.clip(cand[:, j], 0.0, 1.0)
                g = gap(_coeffs_from_params(cand, n, mode))
                better = g > ba + 1e-15
                xa[better] = cand[better]
                ba[better] = g[better]
                improved |= better
        x[rows], best[rows] = xa, ba
        step[rows] = np.where(improved, sa, 0.5 * sa)
    return _coeffs_from_params(x, n, mode), best


def _order_key(w: BohrWitness) -> tuple:
    flat = []
    for c in w.poly.coeffs:
        flat.extend((c.real, c.imag))
    return (-w.gap, tuple(flat))


def search_violation(
    n: int,
    r: float,
    restarts: int = 200,
    mode: Mode = "real",
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
) -> BohrWitness | None:
    """Look for ``p`` of degree ``<= n`` with ``majorant(p, r) > supnorm(p)``.

    All restarts run as one batch; the most promising end points are re-scored
    with the refined :func:`supnorm` and the best is kept.  Returns ``None``
    unless its gap exceeds ``VIOLATION_THRESHOLD``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r!r}")
    if restarts < 1:
        raise ValueError(f"restarts must be >= 1, got {restarts}")
    if mode not in ("real", "complex"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = np.random.default_rng(seed)
    gap = _BatchGap(n, r, samples)
    coeffs, coarse = _coordinate_ascent(gap, _initial_params(rng, restarts, n, mode), n, mode)
    top = np.argsort(-coarse, kind="stable")[:_REFINE_PEAKS]
    witnesses = [bohr_gap(DiskPolynomial(tuple(coeffs[i])), r, samples) for i in top]
    best = min(witnesses, key=_order_key)
    return best if best.gap > VIOLATION_THRESHOLD else None


def find_violation(
    n: int,
    r: float,
    restarts: int = 200,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    modes: Sequence[Mode] = ("real", "complex"),
) -> BohrWitness | None:
    """Try each mode in turn, stopping at the first witness."""
    for mode in modes:
        w = search_violation(n, r, restarts, mode, seed, samples)
        if w is not None:
            return w
    return None


def empirical_radius(
    n: int,
    budget: int = 200,
    seed: int = 0,
    lo: float = 1.0 / 3.0,
    hi: float = 0.9,
    width: float = 0.02,
) -> tuple[float, float | None]:
    """Bracket the Bohr radius by bisection on "a violator exists at r".

    Returns ``(lo, hi)`` with ``hi`` the smallest tested ``r`` that produced a
    witness and ``lo`` the largest that did not.  If nothing is found even at
    the top of the window the result is ``(hi, None)``: inconclusive.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    if find_violation(n, hi, budget, seed) is None:
        return hi, None
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if find_violation(n, mid, budget, seed) is None:
            lo = mid
        else:
            hi = mid
    return lo, hi
