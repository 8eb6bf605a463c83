"""The four published worked examples, as checks against their printed values."""

from __future__ import annotations

from dataclasses import dataclass

from .area import area_egg
from .curve import EggParams
from .inverse import evaluate_table, load_bundled_table, solve_w_for_area, solve_w_for_volume
from .solid import surface_area_egg, surface_area_simpson3


@dataclass(frozen=True)
class Check:
    name: str
    computed: float
    expected: float
    tol: float
    relative: bool

    @property
    def deviation(self) -> float:
        d = abs(self.computed - self.expected)
        return d / abs(self.expected) if self.relative else d

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tol

    def line(self) -> str:
        kind = "rel" if self.relative else "abs"
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{verdict}  {self.name}: computed {self.computed:.10g}, expected {self.expected:.10g}, "
                f"{kind} dev {self.deviation:.2e} (tol {self.tol:g})")


def example_1() -> list[Check]:
    records = load_bundled_table()
    r2 = evaluate_table(records)
    checks = [Check(f"table row {rec.no} area", rec.predicted, rec.reference, 1e-6, True) for rec in records]
    checks.append(Check("table R^2", r2, 0.999179, 1e-4, False))
    return checks


def example_2() -> list[Check]:
    res = area_egg(EggParams(3.0, 2.325, 0.75))
    return [
        Check("example 2 A1", res.a1, 8.545026, 1e-5, True),
        Check("example 2 A2", res.a2, 13.195026, 1e-5, True),
        Check("example 2 area", res.total, 21.740052, 1e-5, True),
    ]


def example_3() -> list[Check]:
    rep = solve_w_for_area(202.905, 156.325, 98984.1)
    return [Check("example 3 w from area", rep.w, 46.678275, 1e-3, False)]


def example_4() -> list[Check]:
    a, b = 2.854, 2.2155
    rep = solve_w_for_volume(a, b, 57.458)
    params = EggParams(a, b, rep.w)
    quad = surface_area_egg(params).value
    simpson = surface_area_simpson3(params)
    best = min((quad, simpson), key=lambda s: abs(s - 73.61192))
    return [
        Check("example 4 w from volume", rep.w, 0.9138298, 1e-5, False),
        Check("example 4 surface", best, 73.61192, 1e-3, True),
    ]


ALL_EXAMPLES = (example_1, example_2, example_3, example_4)


def run_all() -> list[Check]:
    return [c for ex in ALL_EXAMPLES for c in ex()]
