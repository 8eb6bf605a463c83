"""Deterministic SVG rendering of the egg outline."""

from __future__ import annotations

from .curve import EggParams, f1, max_abscissa

MIN_SAMPLES = 16
_PX_PER_UNIT_MAX = 400.0  # the longer side of the drawing is this many px
_MARGIN = 0.08  # fraction of the longer semi-axis


def _num(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _upper(params: EggParams, x: float) -> float:
    if params.degenerate and x <= -params.a:
        # flat end of the paraboloid-like limit shape
        return params.b
    return f1(params, x)


def outline(params: EggParams, samples: int) -> list[tuple[float, float]]:
    """Closed outline: ``samples`` upper points left to right, then the lower half back."""
    if samples < MIN_SAMPLES:
        raise ValueError(f"samples must be >= {MIN_SAMPLES}, got {samples}")
    a = params.a
    xs = [-a + 2.0 * a * i / (samples - 1) for i in range(samples)]
    xs[-1] = a
    upper = [(x, _upper(params, x)) for x in xs]
    lower = [(x, -y) for x, y in reversed(upper)]
    return upper + lower


def marker(params: EggParams) -> tuple[float, float]:
    """The widest point (u, f1(u))."""
    if params.degenerate:
        return -params.a, params.b
    u = max_abscissa(params)
    return u, f1(params, u)


def render_svg(params: EggParams, samples: int = 256) -> str:
    pts = outline(params, samples)
    a = params.a
    ymax = max(y for _, y in pts)
    margin = _MARGIN * max(a, ymax)
    scale = _PX_PER_UNIT_MAX / (2 * max(a, ymax) + 2 * margin)
    width = (2 * a + 2 * margin) * scale
    height = (2 * ymax + 2 * margin) * scale

    def px(x: float, y: float) -> tuple[float, float]:
        # SVG y grows downwards
        return (x + a + margin) * scale, (ymax + margin - y) * scale

    coords = [px(x, y) for x, y in pts]
    d = "M " + " L ".join(f"{_num(cx)} {_num(cy)}" for cx, cy in coords) + " Z"
    bx0, by0 = px(-a, ymax)
    bx1, by1 = px(a, -ymax)
    ax0, ay = px(-a, 0.0)
    ax1, _ = px(a, 0.0)
    mx, my = px(*marker(params))
    r = max(2.0, 0.01 * _PX_PER_UNIT_MAX)
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
        f"  <title>egg a={params.a!r} b={params.b!r} w={params.w!r}</title>",
        f'  <rect x="{_num(bx0)}" y="{_num(by0)}" width="{_num(bx1 - bx0)}" height="{_num(by1 - by0)}" '
        'fill="none" stroke="#999999" stroke-width="0.5"/>',
        f'  <line x1="{_num(ax0)}" y1="{_num(ay)}" x2="{_num(ax1)}" y2="{_num(ay)}" '
        'stroke="#999999" stroke-width="0.5"/>',
        f'  <path d="{d}" fill="none" stroke="#000000" stroke-width="1"/>',
        f'  <circle cx="{_num(mx)}" cy="{_num(my)}" r="{_num(r)}" fill="#cc0000"/>',
        "</svg>",
        "",
    ]
    return "\n".join(lines)


def path_points(svg_text: str) -> list[tuple[float, float]]:
    """Pixel coordinates of the curve path in an SVG produced by :func:`render_svg`."""
    import xml.etree.ElementTree as ET

    root = ET.fromstring(svg_text)
    path = root.find("{http://www.w3.org/2000/svg}path")
    toks = path.get("d").replace("M", " ").replace("L", " ").replace("Z", " ").split()
    vals = [float(t) for t in toks]
    return list(zip(vals[0::2], vals[1::2]))

