"""Aggregated per-shape report and its serialisations."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .area import ELLIPSE_LIMIT, AreaBreakdown, area_egg
from .curve import EggParams
from .quadrature import QuadratureResult
from .solid import PARABOLOID_LIMIT, surface_area_egg, surface_area_simpson3, volume_egg

LIMIT_FLAGS = frozenset({ELLIPSE_LIMIT, PARABOLOID_LIMIT})
MACHINE_DIGITS = 12
HUMAN_DIGITS = 6


@dataclass(frozen=True)
class ShapeReport:
    params: EggParams
    area: AreaBreakdown | None  # None when w == a
    volume: float
    surface: QuadratureResult
    surface_simpson3: float | None  # None when w == a
    limit_flags: frozenset


def build_report(params: EggParams, tol: float = 1e-10) -> ShapeReport:
    flags = set()
    if params.degenerate:
        area = None
        simpson = None
        flags.add(PARABOLOID_LIMIT)
    else:
        area = area_egg(params)
        simpson = surface_area_simpson3(params)
        flags |= area.flags & LIMIT_FLAGS
    return ShapeReport(
        params=params,
        area=area,
        volume=volume_egg(params),
        surface=surface_area_egg(params, tol),
        surface_simpson3=simpson,
        limit_flags=frozenset(flags),
    )


def _round(x: float) -> float:
    return float(f"{x:.{MACHINE_DIGITS}g}")


def _rounded(obj):
    if isinstance(obj, float):
        return _round(obj)
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    return obj


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, floats cut to 12 significant digits.

    Idempotent, so ``dumps(json.loads(dumps(x))) == dumps(x)``.
    """
    return json.dumps(_rounded(obj), sort_keys=True, indent=2, allow_nan=False)


def report_to_dict(rep: ShapeReport) -> dict:
    p = rep.params
    area = None
    if rep.area is not None:
        a = rep.area
        area = {"a1": a.a1, "a2": a.a2, "total": a.total, "p": a.p,
                "kappa": a.kappa, "lambda": a.lambda_, "u": a.u}
    return {
        "params": {"a": float(p.a), "b": float(p.b), "w": float(p.w)},
        "area": area,
        "volume": rep.volume,
        "surface": {"value": rep.surface.value, "error_estimate": rep.surface.error_estimate},
        "surface_simpson3": rep.surface_simpson3,
        "flags": sorted(rep.limit_flags),
    }


def _h(x: float | None) -> str:
    if x is None:
        return "-"
    return f"{x:.{HUMAN_DIGITS}g}"


def report_to_text(rep: ShapeReport) -> str:
    p = rep.params
    rows = [("a", _h(p.a)), ("b", _h(p.b)), ("w", _h(p.w))]
    if rep.area is None:
        rows.append(("area", "degenerate (w = a)"))
    else:
        a = rep.area
        rows += [("area A1", _h(a.a1)), ("area A2", _h(a.a2)), ("area", _h(a.total)),
                 ("p", _h(a.p)), ("kappa", _h(a.kappa)), ("u", _h(a.u))]
    rows += [
        ("volume", _h(rep.volume)),
        ("surface", f"{_h(rep.surface.value)}  (+/- {rep.surface.error_estimate:.1e})"),
        ("surface, 3-pt Simpson", _h(rep.surface_simpson3)),
        ("flags", ", ".join(sorted(rep.limit_flags)) or "-"),
    ]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def finite_report(rep: ShapeReport) -> bool:
    vals = [rep.volume, rep.surface.value]
    if rep.area is not None:
        vals += [rep.area.a1, rep.area.a2, rep.area.total]
    if rep.surface_simpson3 is not None:
        vals.append(rep.surface_simpson3)
    return all(math.isfinite(v) for v in vals)
