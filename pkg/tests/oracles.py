"""Independent reference values.

Nothing here imports the package.  Frozen constants were produced once with
mpmath (50 digits) from dense determinants of T_n(r) and findroot; the
polynomial forms are hand expansions of the 2x2, 3x3 and 4x4 determinants.
"""

import math

PI2_OVER_3 = math.pi**2 / 3

# smallest root in (0, 1) of det T_n(r), mpmath dense determinant + findroot
R_MP = {
    2: 0.57735026918962576451,
    3: 0.46939642456999467920,
    4: 0.42236783277454436967,
    5: 0.39688209385728432142,
    6: 0.38127607238542207656,
    7: 0.37093330399856293973,
    10: 0.35439253377597484968,
    50: 0.33451023370075825185,
    100: 0.33364383876547813054,
}

# (-2 cos x - sqrt(4 cos^2 x - 3)) / 3 at x = 0.95 pi, mpmath 40 digits
G_095PI = 0.34186012336147049292


def delta1(r):
    return 1 - r**2


def delta2(r):
    return 1 - 2 * r**2 - 3 * r**4


def delta3(r):
    return 1 - 3 * r**2 - 5 * r**4 - 9 * r**6


def delta_at_third(n):
    """Delta_n(1/3) = (2/3)**(n+1) (n+3)/2 (double characteristic root 2/3)."""
    return (2 / 3) ** (n + 1) * (n + 3) / 2


def log_delta_at_third(n):
    return (n + 1) * math.log(2 / 3) + math.log((n + 3) / 2)


def plain_bisect(f, lo, hi, tol=1e-15):
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def u_at_minus_one(k):
    return (-1) ** k * (k + 1)


def pn_at_pi(n):
    """p_n(-1) with r = 1/3: (-1)**(n+1) (4n + 12) / 9."""
    return (-1) ** (n + 1) * (4 * n + 12) / 9
