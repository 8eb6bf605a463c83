import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from conftest import GRID, rel
from eggcurve.area import (ELLIPSE_LIMIT, SMALL_W_SERIES, area_egg, area_numeric_oracle,
                           area_specialized, ellipse_area)
from eggcurve.curve import EggParams
from eggcurve.errors import DegenerateCurveError

# mpmath quadrature of 2 * int f1 at 30 digits
AREA_1_1_2 = 1.5200399881728984325
AREA_2_1_05 = 6.2337067248430745118


def test_worked_example():
    res = area_egg(EggParams(3, 2.325, 0.75))
    assert rel(res.a1, 8.545026) < 1e-6
    assert rel(res.a2, 13.195026) < 1e-6
    assert rel(res.total, 21.740052) < 1e-6
    assert res.u == -0.75 and res.p == pytest.approx(0.8, rel=1e-15)
    assert res.kappa == pytest.approx(res.lambda_, rel=1e-14)
    assert res.a2 - res.a1 == pytest.approx(4.65, rel=1e-12)


def test_golden_values():
    assert rel(area_egg(EggParams(1, 1, 2)).total, AREA_1_1_2) < 1e-13
    assert rel(area_egg(EggParams(2, 1, 0.5)).total, AREA_2_1_05) < 1e-13
    assert rel(area_numeric_oracle(EggParams(2, 1, 0.5)).value, AREA_2_1_05) < 1e-11


def test_right_branch_split():
    res = area_specialized(EggParams(1, 1, 2))
    assert res.a2 - res.a1 == pytest.approx(2 / 3, rel=1e-12)


def test_ellipse_limit():
    res = area_egg(EggParams(3, 2.325, 0.0))
    assert res.total == ellipse_area(3, 2.325)
    assert ELLIPSE_LIMIT in res.flags
    near = area_egg(EggParams(3, 2.325, 1e-8))
    assert rel(near.total, math.pi * 3 * 2.325) < 1e-6
    assert SMALL_W_SERIES in near.flags
    assert rel(area_numeric_oracle(EggParams(1, 1, 1e-9)).value, math.pi) < 1e-10


def test_degenerate_refused():
    for fn in (area_egg, area_specialized, area_numeric_oracle):
        with pytest.raises(DegenerateCurveError):
            fn(EggParams(2, 1, 2))


@pytest.mark.parametrize("a,b,w", GRID)
def test_grid(a, b, w):
    p = EggParams(a, b, w)
    res = area_egg(p)
    assert rel(res.total, area_numeric_oracle(p).value) <= 1e-9
    assert rel(res.total, area_specialized(p).total) <= 1e-12
    diff = 8 * b * w / 3 if w < a else 8 * a**3 * b / (3 * w * w)
    assert rel(res.a2 - res.a1, diff) <= 1e-10
    assert res.kappa == pytest.approx(res.lambda_, rel=1e-14)
    assert 0 < res.p < 1 and res.a1 > 0 and res.a2 > 0
    assert res.total == res.a1 + res.a2


@pytest.mark.parametrize("r", [1e-6, 1e-4, 5e-3, 9.9e-3, 1.01e-2, 3e-2])
def test_small_w_across_series_switch(r):
    # the series and the elliptic closed form meet at w/a = 1e-2
    p = EggParams(1.0, 1.0, r)
    assert rel(area_egg(p).total, area_numeric_oracle(p, tol=1e-13).value) < 1e-12


@pytest.mark.parametrize("a,b", [(1.0, 1.0), (3.0, 2.325), (2.0, 0.5)])
def test_strictly_decreasing_in_w(a, b):
    ws = [a * k / 50 for k in range(1, 301) if k != 50]
    areas = [area_egg(EggParams(a, b, w)).total for w in ws]
    assert all(x > y for x, y in zip(areas, areas[1:]))


@settings(max_examples=60, deadline=None)
@given(st.floats(0.1, 10), st.floats(0.1, 10), st.floats(0.05, 20))
def test_closed_forms_agree(a, b, r):
    # below w/a ~ 0.05 the substituted form cancels like eps*(a/w)^2
    assume(abs(r - 1) > 1e-6)
    p = EggParams(a, b, r * a)
    assert rel(area_egg(p).total, area_specialized(p).total) < 1e-10


@settings(max_examples=30, deadline=None)
@given(st.floats(0.1, 10), st.floats(0.1, 10), st.floats(0, 5), st.floats(0.1, 10))
def test_scaling(a, b, r, k):
    assume(abs(r - 1) > 1e-6)
    p = EggParams(a, b, r * a)
    assert rel(area_egg(p.scaled(k)).total, k * k * area_egg(p).total) < 1e-10
