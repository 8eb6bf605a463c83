import xml.etree.ElementTree as ET

import pytest
from click.testing import CliRunner

from eggcurve.cli import main
from eggcurve.curve import EggParams
from eggcurve.svg import outline, path_points, render_svg

NS = "{http://www.w3.org/2000/svg}"


def _top_x(params, samples):
    pts = outline(params, samples)
    return max(pts, key=lambda p: p[1])[0]


def test_topmost_point_at_minus_w():
    p = EggParams(3, 2.325, 0.75)
    step = 6 / 255
    assert _top_x(p, 256) == pytest.approx(-0.75, abs=step)


def test_topmost_pixel_matches_marker():
    text = render_svg(EggParams(3, 2.325, 0.75), 256)
    root = ET.fromstring(text)
    circle = root.find(NS + "circle")
    pts = path_points(text)
    top = min(pts, key=lambda p: p[1])  # svg y points down
    assert abs(top[0] - float(circle.get("cx"))) < 400 / 255
    assert len(root.findall(NS + "path")) == 1
    assert len(root.findall(NS + "circle")) == 1
    assert root.find(NS + "rect") is not None


def test_circle_case():
    p = EggParams(1, 1, 0)
    assert _top_x(p, 257) == 0.0
    pts = outline(p, 257)
    assert all(abs(x * x + y * y - 1) < 1e-12 for x, y in pts)


def test_deterministic_and_degenerate():
    p = EggParams(3, 2.325, 0.75)
    assert render_svg(p, 64) == render_svg(p, 64)
    assert "<path" in render_svg(EggParams(2, 1, 2), 32)


def test_plot_cli(tmp_path):
    out = tmp_path / "egg.svg"
    runner = CliRunner()
    args = ["plot", "--a", "3", "--b", "2.325", "--w", "0.75", "--samples", "256", "--out", str(out)]
    assert runner.invoke(main, args).exit_code == 0
    first = out.read_text()
    assert runner.invoke(main, args).exit_code == 0
    assert out.read_text() == first
    ET.fromstring(first)
    bad = runner.invoke(main, args[:-3] + ["8", "--out", str(out)])
    assert bad.exit_code == 2
    res = runner.invoke(main, ["plot", "--a", "1", "--b", "1", "--out", str(tmp_path / "no" / "x.svg")])
    assert res.exit_code == 2
