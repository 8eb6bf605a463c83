import json
import math

import pytest
from click.testing import CliRunner
from hypothesis import given, settings, strategies as st

from eggcurve.cli import main
from eggcurve.curve import EggParams
from eggcurve.inverse import bundled_table_path
from eggcurve.report import build_report, dumps, finite_report, report_to_dict


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


def test_eval_json_worked_example():
    res = run("eval", "--a", 3, "--b", 2.325, "--w", 0.75, "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["area"]["total"] == pytest.approx(21.740052, rel=1e-6)
    assert set(data) == {"params", "area", "volume", "surface", "surface_simpson3", "flags"}
    assert set(data["area"]) == {"a1", "a2", "total", "p", "kappa", "lambda", "u"}
    assert dumps(json.loads(res.output)) == res.output.rstrip("\n")


def test_eval_sphere_text():
    res = run("eval", "--a", 1, "--b", 1, "--w", 0)
    assert res.exit_code == 0
    assert "4.18879" in res.output and "12.5664" in res.output and "ellipse-limit" in res.output


def test_eval_invalid():
    res = run("eval", "--a", 3, "--b", -1, "--w", 0.1)
    assert res.exit_code == 2
    assert "b must be positive" in res.output


def test_eval_degenerate_is_partial():
    res = run("eval", "--a", 2, "--b", 1, "--w", 2, "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["area"] is None and data["flags"] == ["paraboloid-limit"]
    assert data["volume"] == pytest.approx(2 * math.pi)


def test_table_bundled():
    res = run("table", bundled_table_path())
    assert res.exit_code == 0
    assert "3.420108848" in res.output
    assert "R^2 0.99915" in res.output and "warnings 0" in res.output


def test_table_json_single_row(tmp_path):
    f = tmp_path / "one.csv"
    f.write_text("L,B,A,w\n6,4.65,21.7,0.75\n")
    res = run("table", f, "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["rows"][0]["area"] == pytest.approx(21.740052, rel=1e-6)
    assert data["r_squared"] is None


def test_table_errors(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("L,B,A,w\n")
    res = run("table", empty)
    assert res.exit_code == 2 and "no data rows" in res.output
    bad = tmp_path / "bad.csv"
    bad.write_text("L,B,w\n1,1,0\n")
    assert run("table", bad).exit_code == 2
    assert run("table", tmp_path / "missing.csv").exit_code == 2
    mixed = tmp_path / "mixed.csv"
    mixed.write_text("L,B,A,w\n6,4.65,21.7,0.75\n6,x,21.7,0.75\n")
    res = run("table", mixed)
    assert res.exit_code == 0 and "warnings 1" in res.output


def test_table_is_order_preserving(tmp_path):
    rows = ["L,B,A,w", "9.43,7.45,54.31,0.275", "2.25,1.94,3.41,0.155", "5.12,4.04,16.01,0.150"]
    f = tmp_path / "t.csv"
    f.write_text("\n".join(rows) + "\n")
    first = run("table", f, "--format", "json")
    second = run("table", f, "--format", "json")
    assert first.output == second.output
    assert [r["L"] for r in json.loads(first.output)["rows"]] == [9.43, 2.25, 5.12]


def test_solve():
    res = run("solve", "--a", 2.854, "--b", 2.2155, "--quantity", "volume", "--target", 57.458)
    assert res.exit_code == 0 and "0.91382984" in res.output
    res = run("solve", "--a", 202.905, "--b", 156.325, "--quantity", "area", "--target", 98984.1,
              "--format", "json")
    assert res.exit_code == 0
    assert json.loads(res.output)["w"] == pytest.approx(46.706925015, abs=1e-8)
    res = run("solve", "--a", 1, "--b", 1, "--quantity", "area", "--target", 10)
    assert res.exit_code == 3 and "3.14159265359" in res.output


def test_examples_command_reports_every_check():
    res = run("examples")
    lines = [ln for ln in res.output.splitlines() if ln.startswith(("PASS", "FAIL"))]
    assert len(lines) == 26
    # the published example-3 offset is not reproducible (see notes), so the command exits 1
    assert res.exit_code == 1
    assert [ln for ln in lines if ln.startswith("FAIL")] == [
        ln for ln in lines if "example 3" in ln]


@settings(max_examples=30, deadline=None)
@given(st.floats(0.1, 10), st.floats(0.1, 10), st.floats(0, 5))
def test_json_round_trip(a, b, r):
    rep = build_report(EggParams(a, b, r * a))
    assert finite_report(rep)
    text = dumps(report_to_dict(rep))
    assert dumps(json.loads(text)) == text
