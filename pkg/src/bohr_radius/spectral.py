"""Angle substitution for the roots of Delta_n.

Writing ``r = g(x) = (-2 cos x - sqrt(4 cos^2 x - 3)) / 3`` for ``x`` in
``[5 pi/6, pi]`` turns the determinant recurrence into a Chebyshev-type
recurrence, and

    Delta_n(g(x)) = (-2r)**(n+1) / (1 - r**2) * p_n(cos x),
    p_n(cos x) = U_{n+1}(cos x) + 2r U_n(cos x) + r**2 U_{n-1}(cos x).

At the nodes ``x_v = v pi/(n+2)`` one has
``p_n(cos x_v) = (-1)**(v+1) 2r (1 + r cos x_v)``, and ``p_n`` tends to
``(-1)**(n+1) ((n+2) - 2r(n+1) + r**2 n)`` as ``x -> pi``.  So each gap
``(x_v, x_{v+1})`` holds one zero and the largest zero sits in
``(x_{n+1}, pi)``, past the last node.  Its image under ``g`` is the Bohr
radius ``R_n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .rootfind import MAX_ITER, RootBracket, bisect_sign

X_MIN = 5.0 * math.pi / 6.0
# pi - float(pi); keeps pi - x accurate when x is within a few ulps of pi
_PI_LO = 1.2246467991473532e-16
_DISC_CLAMP = 1e-14
MIN_SPECTRAL_N = 7


@dataclass(frozen=True)
class SpectralPoint:
    x: float
    r: float
    t: float

    @classmethod
    def at(cls, x: float) -> "SpectralPoint":
        return cls(x=x, r=subst_g(x), t=math.cos(x))


@dataclass(frozen=True)
class NodeGrid:
    n: int
    nodes: list[float]


def subst_g(x: float) -> float:
    """Map an angle in ``[5 pi/6, pi]`` to the radius ``r`` on the real branch.

    The discriminant ``4 cos^2 x - 3`` is clamped to zero when it is negative
    by less than 1e-14, which absorbs rounding at ``x = 5 pi/6``.
    """
    if x > math.pi:
        raise DomainError(f"x={x!r} exceeds pi")
    c = math.cos(x)
    disc = 4.0 * c * c - 3.0
    if disc < 0.0:
        if disc < -_DISC_CLAMP:
            raise DomainError(f"4cos^2(x) - 3 < 0 at x={x!r}; need x >= 5*pi/6")
        disc = 0.0
    g = (-2.0 * c - math.sqrt(disc)) / 3.0
    if g <= 0.0:
        raise DomainError(f"g(x) <= 0 at x={x!r}; need x >= 5*pi/6")
    return g


def symbol_f(r: float, theta: float) -> float:
    c = math.cos(theta)
    return (3.0 * r * r + 4.0 * r * c + 1.0) / (r * r + 2.0 * r * c + 1.0)


def cheb_u(t: float, kmax: int) -> np.ndarray:
    """``U_0(t) .. U_kmax(t)`` by the three-term recurrence."""
    if abs(t) > 1.0 + 1e-12:
        raise DomainError(f"|t| must be <= 1, got {t!r}")
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    u = np.empty(kmax + 1)
    u[0] = 1.0
    if kmax >= 1:
        u[1] = 2.0 * t
    two_t = 2.0 * t
    for k in range(1, kmax):
        u[k + 1] = two_t * u[k] - u[k - 1]
    return u


def _reflected_sine_ratio(k: int, theta: float, sin_theta: float) -> float:
    # sin(k x) / sin x with x = pi - theta
    if sin_theta == 0.0:
        ratio = float(k)
    else:
        ratio = math.sin(k * theta) / sin_theta
    return ratio if k % 2 else -ratio


def pn_eval(n: int, x: float, kernel: str = "sine") -> float:
    """Evaluate ``p_n(cos x)`` with ``r = g(x)``.

    ``kernel="sine"`` uses ``sin(kx)/sin x = (-1)**(k+1) sin(k theta)/sin theta``
    with ``theta = pi - x``; this is O(1) per call and stays regular at
    ``x = pi``.  ``kernel="chebyshev"`` runs the ``U_k`` recurrence, O(n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    r = subst_g(x)
    if kernel == "chebyshev":
        u = cheb_u(math.cos(x), n + 1)
        return float(u[n + 1] + 2.0 * r * u[n] + r * r * u[n - 1])
    if kernel != "sine":
        raise ValueError(f"unknown kernel {kernel!r}")
    theta = (math.pi - x) + _PI_LO
    s = math.sin(theta)
    return (
        _reflected_sine_ratio(n + 2, theta, s)
        + 2.0 * r * _reflected_sine_ratio(n + 1, theta, s)
        + r * r * _reflected_sine_ratio(n, theta, s)
    )


def delta_from_pn(n: int, x: float) -> tuple[int, float]:
    """``(sign, log|.|)`` of ``(-2r)**(n+1) / (1 - r**2) * p_n(cos x)``."""
    r = subst_g(x)
    p = pn_eval(n, x)
    if p == 0.0:
        return 0, -math.inf
    sign = (1 if p > 0 else -1) * (-1) ** (n + 1)
    log_mag = (n + 1) * math.log(2.0 * r) - math.log1p(-r * r) + math.log(abs(p))
    return sign, log_mag


def nodes(n: int) -> NodeGrid:
    if n < 1:
        raise ValueError("n must be >= 1")
    return NodeGrid(n=n, nodes=[v * math.pi / (n + 2) for v in range(1, n + 2)])


def _sign(v: float) -> int:
    return int(v > 0) - int(v < 0)


def bracket_endpoints(n: int) -> tuple[float, float]:
    """``(x_{n+1}, (x_{n+1} + x_{n+2}) / 2)``, i.e. ``(n+2) (pi - x)`` in ``(pi/2, pi)``."""
    return (n + 1) * math.pi / (n + 2), ((n + 1) * math.pi + 0.5 * math.pi) / (n + 2)


def bracket(n: int) -> RootBracket:
    """Half-node-spacing bracket for the largest zero of ``p_n``.

    The signs are evaluated, never assumed: a mismatch raises
    :class:`BracketSignError`.
    """
    if n < MIN_SPECTRAL_N:
        raise DomainError(
            f"spectral bracket needs n >= {MIN_SPECTRAL_N}, got n={n}; "
            "use the direct method"
        )
    lo, hi = bracket_endpoints(n)
    return RootBracket(
        lo=lo, hi=hi, sign_lo=_sign(pn_eval(n, lo)), sign_hi=_sign(pn_eval(n, hi))
    )


@dataclass(frozen=True)
class SpectralRoot:
    x: float
    r: float
    bracket: RootBracket
    iterations: int


def find_spectral_root(n: int, tol: float = 1e-14) -> SpectralRoot:
    br = bracket(n)
    _, _, x, it = bisect_sign(lambda v: _sign(pn_eval(n, v)), br, tol, MAX_ITER)
    return SpectralRoot(x=x, r=subst_g(x), bracket=br, iterations=it)


def solve_spectral(n: int, tol: float = 1e-14) -> tuple[float, float]:
    """Angle ``x*`` of the largest zero of ``p_n`` and the radius ``g(x*)``."""
    root = find_spectral_root(n, tol)
    return root.x, root.r
