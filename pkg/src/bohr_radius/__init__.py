"""Bohr radius R_n of complex polynomials of degree at most n.

R_n is the smallest zero in (0, 1) of the determinant of an explicit
symmetric Toeplitz matrix.  It is computed two independent ways (direct
determinant scan and an angle substitution) and checked against
``n^2 (R_n - 1/3) -> pi^2/3``.
"""

from .asympt import LIMIT, AsymRow, ExtrapolationResult, asym_row, asym_table, richardson
from .bohrcheck import (
    BohrWitness,
    DiskPolynomial,
    bohr_gap,
    empirical_radius,
    majorant,
    search_violation,
    supnorm,
)
from .errors import BohrRadiusError, BracketSignError, ConvergenceError, CrossCheckError, DomainError
from .rootfind import RootBracket
from .solver import RadiusResult, radius, radius_direct, radius_spectral
from .spectral import NodeGrid, SpectralPoint, bracket, cheb_u, nodes, pn_eval, solve_spectral, subst_g, symbol_f
from .toeplitz import ScaledDet, ToeplitzMatrix, ToeplitzParams, build_matrix, delta, delta_sign_profile, dense_det

__all__ = [
    "LIMIT",
    "AsymRow",
    "BohrRadiusError",
    "BohrWitness",
    "BracketSignError",
    "ConvergenceError",
    "CrossCheckError",
    "DiskPolynomial",
    "DomainError",
    "ExtrapolationResult",
    "NodeGrid",
    "RadiusResult",
    "RootBracket",
    "ScaledDet",
    "SpectralPoint",
    "ToeplitzMatrix",
    "ToeplitzParams",
    "asym_row",
    "asym_table",
    "bohr_gap",
    "bracket",
    "build_matrix",
    "cheb_u",
    "delta",
    "delta_sign_profile",
    "dense_det",
    "empirical_radius",
    "majorant",
    "nodes",
    "pn_eval",
    "radius",
    "radius_direct",
    "radius_spectral",
    "richardson",
    "search_violation",
    "solve_spectral",
    "subst_g",
    "supnorm",
    "symbol_f",
]
