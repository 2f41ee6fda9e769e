import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bohr_radius.asympt import (
    LIMIT,
    AsymRow,
    asym_row,
    asym_table,
    pow2_grid,
    richardson,
)

from oracles import PI2_OVER_3


def test_limit_constant():
    assert LIMIT == PI2_OVER_3


def test_row_n2():
    row = asym_row(2)
    assert row.c == pytest.approx(4 * (3**-0.5 - 1 / 3), abs=1e-12)
    assert row.c == pytest.approx(0.9760678, abs=1e-7)
    assert row.deviation == pytest.approx(0.9760678 - 3.2898681, abs=1e-6)
    assert row.deviation < 0
    assert row.eps is None


def test_row_n1000():
    assert 3.2 <= asym_row(1000).c <= 3.3


def test_table_order():
    rows = asym_table([3, 2])
    assert [r.n for r in rows] == [3, 2]
    assert rows[1].radius == pytest.approx(0.57735, abs=1e-5)
    assert rows[0].radius == pytest.approx(0.46940, abs=1e-5)


def test_table_empty():
    with pytest.raises(ValueError):
        asym_table([])


def test_deviation_shrinks():
    devs = [abs(r.deviation) for r in asym_table([100, 200, 400, 800])]
    assert all(a > b for a, b in zip(devs, devs[1:]))


def test_c_positive():
    for row in asym_table([2, 3, 5, 8, 13, 40, 300]):
        assert row.c > 0


def test_eps_bookkeeping():
    for n in (7, 10, 100, 10_000):
        row = asym_row(n)
        assert abs((row.theta * (n + 2) - math.pi) - row.eps) <= 1e-12
        assert row.theta == pytest.approx((math.pi + row.eps) / (n + 2), abs=1e-15)


def test_eps_range_and_decay():
    # the largest zero sits just past the last node, so eps is negative
    rows = asym_table([7, 8, 20, 100, 1000, 10_000])
    for row in rows:
        assert -math.pi / 2 < row.eps < 0
    assert abs(rows[-1].eps) < abs(rows[3].eps)


@given(st.floats(-5, 5), st.floats(0, 10))
def test_richardson_exact_for_first_order(b, limit):
    rows = [AsymRow(n, 0.0, limit - b / n, 0.0) for n in (64, 128, 256)]
    assert richardson(rows, 1).estimate == pytest.approx(limit, abs=1e-12)


def test_richardson_second_order():
    rows = [AsymRow(n, 0.0, 2.0 + 3.0 / n**2, 0.0) for n in (10, 20)]
    assert richardson(rows, 2).estimate == pytest.approx(2.0, abs=1e-14)


def test_richardson_errors():
    row = AsymRow(8, 0.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        richardson([row], 1)
    with pytest.raises(ValueError):
        richardson([row, AsymRow(24, 0.0, 1.0, 0.0)], 1)
    with pytest.raises(ValueError):
        richardson([row, AsymRow(16, 0.0, 1.0, 0.0)], 3)


def test_richardson_records_samples():
    rows = asym_table([1024, 2048])
    ext = richardson(rows, 1)
    assert ext.order_assumed == 1
    assert ext.samples == [(1024, rows[0].c), (2048, rows[1].c)]
    assert abs(ext.estimate - LIMIT) <= 1e-3


def test_pow2_grid():
    assert pow2_grid(3, 5) == [8, 16, 32]
    with pytest.raises(ValueError):
        pow2_grid(5, 3)
