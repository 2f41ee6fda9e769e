"""Exit criteria, one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` or look at the summary block that
``conftest.py`` appends to the terminal report.
"""

import math
import time

import numpy as np
import pytest

from bohr_radius.asympt import LIMIT, asym_table, richardson
from bohr_radius.bohrcheck import empirical_radius, search_violation
from bohr_radius.solver import radius, radius_direct, radius_spectral
from bohr_radius.spectral import find_spectral_root, nodes, pn_eval, subst_g
from bohr_radius.toeplitz import ToeplitzParams, build_matrix, delta, dense_det

from oracles import delta1, delta2, delta3, delta_at_third, log_delta_at_third

RESULTS: list[tuple[str, bool, str]] = []


def report(label, ok, detail):
    RESULTS.append((label, bool(ok), detail))
    print(f"{label}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def test_criterion_01_dense_equivalence():
    rng = np.random.default_rng(0)
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(13):
        for r in rng.uniform(0.0, 1.0, 20):
            p = ToeplitzParams(n, float(r))
            dd = dense_det(build_matrix(p))
            worst = max(worst, abs(dd - delta(p).raw) / max(1.0, abs(dd)))
    dt = time.perf_counter() - t0
    report("C01 dense vs recurrence", worst <= 1e-9 and dt < 1.0, f"max rel err {worst:.2e}, {dt:.2f}s")


def test_criterion_02_hand_polynomials():
    worst = 0.0
    for n, poly in ((1, delta1), (2, delta2), (3, delta3)):
        for r in np.linspace(0.05, 0.95, 10):
            worst = max(worst, abs(delta(ToeplitzParams(n, float(r))).raw - poly(r)))
    report("C02 hand-expanded Delta_1..3", worst <= 1e-12, f"max abs err {worst:.2e}")


def test_criterion_03_closed_form_at_third():
    # plain values where the recurrence never rescaled, log space otherwise
    worst_plain = worst_log = worst_value = 0.0
    for n in list(range(1, 101)) + [1000, 10_000]:
        d = delta(ToeplitzParams(n, 1 / 3))
        assert d.sign == 1
        exact_log = log_delta_at_third(n)
        worst_value = max(worst_value, abs(math.expm1(d.log_mag - exact_log)))
        if d.raw is not None:
            worst_plain = max(worst_plain, abs(d.raw - delta_at_third(n)) / delta_at_third(n))
        else:
            worst_log = max(worst_log, abs(d.log_mag - exact_log) / abs(exact_log))
    ok = worst_plain <= 1e-10 and worst_log <= 1e-10
    report(
        "C03 Delta_n(1/3) closed form",
        ok,
        f"plain rel err {worst_plain:.2e}, log-space rel err {worst_log:.2e} "
        f"(value rel err at n=10^4: {worst_value:.2e})",
    )


def test_criterion_04_small_radii():
    t0 = time.perf_counter()
    r2 = radius_direct(2).value
    r3 = radius_direct(3).value
    dt = time.perf_counter() - t0
    ok = abs(r2 - 3**-0.5) <= 1e-10 and abs(r3 - 0.46940) <= 1e-4 and dt < 0.1
    report("C04 R_2, R_3", ok, f"R_2={r2!r} R_3={r3!r}, {dt:.3f}s")


def test_criterion_05_cross_method():
    t0 = time.perf_counter()
    worst = 0.0
    for n in (7, 10, 50, 100, 1000, 5000):
        worst = max(worst, abs(radius_direct(n).value - radius_spectral(n).value))
    dt = time.perf_counter() - t0
    report("C05 direct vs spectral", worst <= 1e-10 and dt < 10.0, f"max diff {worst:.2e}, {dt:.2f}s")


def test_criterion_06_asymptotic_law():
    t0 = time.perf_counter()
    rows = asym_table([256, 512, 1024, 2048, 4096])
    devs = [abs(r.deviation) for r in rows]
    rel_4096 = abs(rows[-1].c - LIMIT) / LIMIT
    est = richardson([r for r in rows if r.n in (1024, 2048)], 1).estimate
    dt = time.perf_counter() - t0
    ok = (
        rel_4096 <= 0.01
        and all(a > b for a, b in zip(devs, devs[1:]))
        and abs(est - LIMIT) <= 1e-3
        and dt < 30.0
    )
    report(
        "C06 n^2 (R_n - 1/3) -> pi^2/3",
        ok,
        f"c_4096 rel dev {rel_4096:.2e}, richardson err {est - LIMIT:.2e}, {dt:.2f}s",
    )


def test_criterion_07_monotone_bounds():
    ns = [int(n) for n in np.unique(np.round(np.geomspace(2, 2000, 40)).astype(int))]
    vals = [radius(n).value for n in ns]
    ok = all(1 / 3 < v <= math.sqrt(3) / 3 + 1e-12 for v in vals)
    ok &= all(a >= b for a, b in zip(vals, vals[1:]))
    report("C07 monotone, 1/3 < R_n <= sqrt(3)/3", ok, f"{len(ns)} degrees in [2, 2000]")


def _sgn(v):
    return int(v > 0) - int(v < 0)


def test_criterion_08_interlacing_bracket():
    failures = []
    for n in range(7, 51):
        y = ((n + 1) * math.pi - math.pi / 2) / (n + 2)
        x_last = nodes(n).nodes[-1]
        root = find_spectral_root(n).x
        if _sgn(pn_eval(n, y)) == _sgn(pn_eval(n, x_last)) or not y < root < x_last:
            failures.append(n)
    report(
        "C08 sign change on (y_n, x_{n+1}), root inside",
        not failures,
        f"fails for {len(failures)} of 44 degrees (largest zero lies in (x_(n+1), pi))",
    )


def test_criterion_08b_corrected_bracket():
    """Same check on the mirrored half-spacing bracket past the last node."""
    failures = []
    for n in range(7, 51):
        x_last = (n + 1) * math.pi / (n + 2)
        y_up = ((n + 1) * math.pi + math.pi / 2) / (n + 2)
        root = find_spectral_root(n).x
        if _sgn(pn_eval(n, x_last)) == _sgn(pn_eval(n, y_up)) or not x_last < root < y_up:
            failures.append(n)
    report("C08b sign change on (x_{n+1}, x_{n+1} + pi/(2(n+2)))", not failures, f"failures {failures}")


def test_criterion_09_scaled_limit():
    z = 1.5 * math.pi
    devs = []
    for n in (100, 1000, 10_000):
        x = math.pi - z / (n + 2)
        rr = subst_g(x)
        q = (-1) ** (n + 1) * pn_eval(n, x) / ((n + 2) * (1 - rr) ** 2)
        devs.append(abs(q - math.sin(z) / z))
    ok = devs[0] > devs[1] > devs[2] and devs[2] <= 1e-2
    report("C09 scaled limit sin z / z", ok, "deviations " + ", ".join(f"{d:.2e}" for d in devs))


def test_criterion_10_bohr_definition():
    t0 = time.perf_counter()
    r2, r3 = radius(2).value, radius(3).value
    above2 = search_violation(2, r2 + 0.05, 200, "real", seed=0)
    above3 = search_violation(3, r3 + 0.05, 200, "real", seed=0)
    below2 = [search_violation(2, r2 - 0.05, 200, m, seed=0) for m in ("real", "complex")]
    below3 = [search_violation(3, r3 - 0.05, 200, m, seed=0) for m in ("real", "complex")]
    lo, hi = empirical_radius(2, 200, seed=0)
    dt = time.perf_counter() - t0
    ok = (
        above2 is not None
        and above2.gap > 1e-3
        and above3 is not None
        and above3.gap > 1e-3
        and all(w is None for w in below2 + below3)
        and hi is not None
        and lo - 0.02 <= 0.5774 <= hi + 0.02
        and dt < 60.0
    )
    report(
        "C10 Bohr inequality search",
        ok,
        f"gap(R2+.05)={getattr(above2, 'gap', None):.3g} gap(R3+.05)={getattr(above3, 'gap', None):.3g} "
        f"empirical R2 in ({lo:.4f}, {hi:.4f}), {dt:.1f}s",
    )


def test_criterion_11_scale():
    t0 = time.perf_counter()
    res = radius_spectral(10**6)
    dt = time.perf_counter() - t0
    ok = 1 / 3 < res.value < 1 / 3 + 1e-8 and math.isfinite(res.residual) and dt <= 10.0
    report("C11 R_(10^6)", ok, f"R-1/3={res.value - 1 / 3:.3e}, log|Delta|={res.residual:.1f}, {dt:.2f}s")
