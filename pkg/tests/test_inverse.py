import io
import math

import pytest
from hypothesis import assume, given, settings, strategies as st

import eggcurve.inverse as inverse
from conftest import GRID, rel
from eggcurve.area import area_egg
from eggcurve.curve import EggParams
from eggcurve.errors import AmbiguityError, InvalidParameterError, OutOfRangeError, StatisticsError
from eggcurve.inverse import (CLEVELAND_SHAPE_INDEX, FitRecord, MissingColumnError, cleveland_params,
                              evaluate_table, load_bundled_table, r_squared, read_table,
                              solve_w_for_area, solve_w_for_volume)
from eggcurve.solid import volume_egg

# root of area(202.905, 156.325, w) = 98984.1, mpmath at 30 digits
EXAMPLE_3_ROOT = 46.706925015


def test_area_round_trip_worked_example():
    rep = solve_w_for_area(3, 2.325, 21.740052)
    assert rep.w == pytest.approx(0.75, abs=1e-6)
    assert rep.converged and rep.bracket[0] < rep.w < rep.bracket[1]
    assert abs(rep.residual) <= 1e-10 * 21.740052


def test_example_3_consistent_root():
    rep = solve_w_for_area(202.905, 156.325, 98984.1)
    assert rep.w == pytest.approx(EXAMPLE_3_ROOT, abs=1e-8)
    assert area_egg(EggParams(202.905, 156.325, rep.w)).total == pytest.approx(98984.1, rel=1e-12)


def test_volume_worked_example():
    rep = solve_w_for_volume(2.854, 2.2155, 57.458)
    assert rep.w == pytest.approx(0.9138298, abs=1e-5)
    rep = solve_w_for_volume(3, 2.325, volume_egg(EggParams(3, 2.325, 0.75)))
    assert rep.w == pytest.approx(0.75, abs=1e-8)


def test_near_supremum_goes_to_zero():
    assert solve_w_for_area(1, 1, math.pi * (1 - 1e-12)).w < 1e-4
    assert solve_w_for_volume(1, 1, 4 * math.pi / 3 * (1 - 1e-12)).w < 1e-4


def test_out_of_range():
    with pytest.raises(OutOfRangeError) as info:
        solve_w_for_area(1, 1, 10)
    assert info.value.bounds[1] == pytest.approx(math.pi)
    with pytest.raises(OutOfRangeError) as info:
        solve_w_for_area(1, 1, 1e-6)
    lo, hi = info.value.bounds
    assert 0 < lo < hi
    with pytest.raises(OutOfRangeError):
        solve_w_for_volume(1, 1, -1.0)
    with pytest.raises(InvalidParameterError):
        solve_w_for_area(1, -1, 1.0)


@pytest.mark.parametrize("a,b,w", GRID)
def test_round_trip_grid(a, b, w):
    p = EggParams(a, b, w)
    assert rel(solve_w_for_area(a, b, area_egg(p).total).w, w) < 1e-8
    assert rel(solve_w_for_volume(a, b, volume_egg(p)).w, w) < 1e-8


def test_solution_independent_of_bracket(monkeypatch):
    first = solve_w_for_area(3, 2.325, 20.0).w
    monkeypatch.setattr(inverse, "BRACKETS", ((1e-4, 0.9), (0.9, 1.001), (1.001, 100.0)))
    assert solve_w_for_area(3, 2.325, 20.0).w == pytest.approx(first, abs=1e-10)


def test_ambiguity_is_an_error():
    # a deliberately non-monotone objective with two roots in the first bracket
    with pytest.raises(AmbiguityError) as info:
        inverse._solve(lambda w: 2.0 + math.cos(8 * w), 1.0, 2.0, 3.5, 1e-10, "toy")
    assert len(info.value.candidates) >= 2


@settings(max_examples=30, deadline=None)
@given(st.floats(0.2, 5), st.floats(0.2, 5), st.floats(0.02, 10))
def test_area_round_trip_property(a, b, r):
    assume(abs(r - 1) > 2e-3)
    w = r * a
    target = area_egg(EggParams(a, b, w)).total
    assert rel(solve_w_for_area(a, b, target).w, w) < 1e-7


def test_cleveland():
    p = cleveland_params(2.25, 1.94)
    assert p.w == pytest.approx((2 - math.sqrt(3)) / (3 + math.sqrt(3)) * 1.125, rel=1e-15)
    assert p.w == pytest.approx(0.0637024, abs=1e-7)
    b = (2 + math.sqrt(3)) / (3 + math.sqrt(3))
    assert FitRecord(L=2, B=2 * b, observed=1).shape_index == pytest.approx(CLEVELAND_SHAPE_INDEX)
    with pytest.raises(InvalidParameterError):
        cleveland_params(0, 1)


def test_r_squared():
    assert r_squared([1, 2, 3], [1, 2, 3]) == 1.0
    assert r_squared([1, 2, 3], [2, 2, 2]) == 0.0
    with pytest.raises(StatisticsError):
        r_squared([1, 2], [1])
    with pytest.raises(StatisticsError):
        r_squared([2, 2], [1, 3])


def test_bundled_table():
    records = load_bundled_table()
    assert len(records) == 19 and records[0].no == "2" and records[-1].no == "20"
    r2 = evaluate_table(records)
    assert r2 == pytest.approx(0.999179, abs=1e-4)
    for rec in records:
        assert rel(rec.predicted, rec.reference) < 1e-6
    assert records[0].predicted == pytest.approx(3.420108855, rel=1e-8)
    swapped = r_squared([r.predicted for r in records], [r.observed for r in records])
    assert swapped == pytest.approx(0.999178, abs=1e-6)


def test_read_table_edge_cases():
    with pytest.raises(MissingColumnError):
        read_table(io.StringIO("L,B,w\n1,1,0\n"))
    records, warnings = read_table(io.StringIO("L,B,A,w\n6,4.65,21.7,0.75\n2,x,1,0\n"))
    assert len(records) == 1 and len(warnings) == 1
    assert evaluate_table(records) is None
    assert records[0].predicted == pytest.approx(21.740052, rel=1e-6)
