"""Recovering the asymmetry offset w from a measured area or volume.

With a and b fixed, both the planar area and the solid volume decrease
strictly in w, from the ellipse/spheroid value at w = 0 towards zero, so a
measured value pins down a single w. The solver brackets that root, checks
the bracket really holds exactly one sign change, and refines it with
Brent's method.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Sequence

from scipy.optimize import brentq

from .area import area_egg, ellipse_area
from .curve import EggParams
from .errors import AmbiguityError, ConvergenceError, OutOfRangeError, StatisticsError
from .solid import spheroid_volume, volume_egg

DEFAULT_TOL = 1e-10
# Brackets tried in order, as multiples of a. The middle one straddles the
# degenerate point w == a, where the objectives use their limit values.
BRACKETS = ((1e-9, 0.999), (0.999, 1.001), (1.001, 100.0))
# Samples per bracket for the monotonicity check.
_SCAN_POINTS = 24
_MAX_ITER = 200

CLEVELAND_W_FACTOR = (2 - math.sqrt(3)) / (3 + math.sqrt(3))
CLEVELAND_SHAPE_INDEX = (2 + math.sqrt(3)) / (3 + math.sqrt(3))


@dataclass
class SolveReport:
    w: float
    residual: float
    bracket: tuple[float, float]
    iterations: int
    converged: bool
    trace: list[tuple[float, float]] = field(default_factory=list)


def _area_objective(a: float, b: float) -> Callable[[float], float]:
    def area(w: float) -> float:
        p = EggParams(a, b, w)
        if p.degenerate:
            # continuous limit: the parabolic cap y^2 = b^2 (a - x)/(2a)
            return 8.0 * a * b / 3.0
        return area_egg(p).total

    return area


def _volume_objective(a: float, b: float) -> Callable[[float], float]:
    return lambda w: volume_egg(EggParams(a, b, w))


def _sign_changes(samples: Sequence[tuple[float, float]]) -> list[tuple[float, float]]:
    out = []
    for (w0, r0), (w1, r1) in zip(samples, samples[1:]):
        if r0 == 0.0:
            out.append((w0, w0))
        elif r0 * r1 < 0.0:
            out.append((w0, w1))
    if samples and samples[-1][1] == 0.0:
        out.append((samples[-1][0], samples[-1][0]))
    return out


def _solve(quantity: Callable[[float], float], a: float, target: float, supremum: float,
           tol: float, label: str) -> SolveReport:
    if not math.isfinite(target) or target <= 0:
        raise OutOfRangeError(f"{label} target must be positive, got {target}", (0.0, supremum))
    if target >= supremum:
        raise OutOfRangeError(
            f"{label} target {target} is not below the w = 0 supremum {supremum}",
            (0.0, supremum),
        )

    trace: list[tuple[float, float]] = []

    def residual(w: float) -> float:
        r = quantity(w) - target
        trace.append((w, r))
        return r

    lowest = None
    for lo_k, hi_k in BRACKETS:
        lo, hi = lo_k * a, hi_k * a
        r_lo, r_hi = residual(lo), residual(hi)
        lowest = target + r_hi
        if r_lo > 0 and r_hi > 0:
            continue
        if r_lo < 0 and r_hi < 0:
            # quantity decreases in w, so a later bracket cannot help
            break
        step = (hi - lo) / (_SCAN_POINTS - 1)
        grid = [lo + i * step for i in range(_SCAN_POINTS)]
        samples = [(grid[0], r_lo)] + [(w, residual(w)) for w in grid[1:-1]] + [(grid[-1], r_hi)]
        changes = _sign_changes(samples)
        if len(changes) != 1:
            raise AmbiguityError(
                f"{label} residual changes sign {len(changes)} times in [{lo}, {hi}]",
                [0.5 * (u + v) for u, v in changes],
            )
        left, right = changes[0]
        if left == right:
            root, iterations, ok = left, 0, True
        else:
            root, info = brentq(residual, left, right, xtol=tol, rtol=max(tol, 4 * 2.2e-16),
                                maxiter=_MAX_ITER, full_output=True, disp=False)
            iterations, ok = info.iterations, info.converged
        achieved = quantity(root)
        res = target - achieved
        converged = ok and abs(res) <= tol * max(1.0, abs(target))
        report = SolveReport(root, res, (lo, hi), iterations, converged, trace)
        if not ok:
            raise ConvergenceError(f"{label} solve did not converge", best=report)
        return report
    raise OutOfRangeError(
        f"{label} target {target} below the smallest value {lowest} reachable for w <= {BRACKETS[-1][1]}*a",
        (lowest, supremum),
    )


def solve_w_for_area(a: float, b: float, target_area: float, tol: float = DEFAULT_TOL) -> SolveReport:
    """Find w > 0 such that the egg with semi-axes a, b encloses ``target_area``.

    Raises:
        OutOfRangeError: target outside (infimum, pi*a*b); ``.bounds`` holds the range.
        AmbiguityError: more than one sign change inside the bracket.
        ConvergenceError: Brent iteration did not converge.
    """
    EggParams(a, b, 0.0)  # validates a, b
    return _solve(_area_objective(a, b), a, target_area, ellipse_area(a, b), tol, "area")


def solve_w_for_volume(a: float, b: float, target_volume: float, tol: float = DEFAULT_TOL) -> SolveReport:
    """Find w > 0 such that the egg solid with semi-axes a, b has ``target_volume``."""
    EggParams(a, b, 0.0)
    return _solve(_volume_objective(a, b), a, target_volume, spheroid_volume(a, b), tol, "volume")


def cleveland_params(L: float, B: float) -> EggParams:
    """Egg model of a Cleveland standard sewer profile of height L and breadth B."""
    return EggParams(L / 2, B / 2, CLEVELAND_W_FACTOR * L / 2)


def r_squared(observed: Sequence[float], predicted: Sequence[float]) -> float:
    """Coefficient of determination 1 - SS_res/SS_tot."""
    if len(observed) != len(predicted):
        raise StatisticsError(f"length mismatch: {len(observed)} observed vs {len(predicted)} predicted")
    if len(observed) < 2:
        raise StatisticsError("need at least two observations")
    mean = math.fsum(observed) / len(observed)
    ss_tot = math.fsum((o - mean) ** 2 for o in observed)
    if ss_tot == 0.0:
        raise StatisticsError("observed values have zero variance")
    ss_res = math.fsum((o - p) ** 2 for o, p in zip(observed, predicted))
    return 1.0 - ss_res / ss_tot


# ---- tabulated sewer profiles ----------------------------------------------

@dataclass
class FitRecord:
    L: float
    B: float
    observed: float
    w: float | None = None
    predicted: float | None = None
    no: str | None = None
    S: float | None = None
    reference: float | None = None

    def __post_init__(self):
        if not (self.L > 0 and self.B > 0):
            raise ValueError(f"L and B must be positive (got L={self.L}, B={self.B})")

    @property
    def shape_index(self) -> float:
        return self.B / self.L

    @property
    def params(self) -> EggParams:
        w = CLEVELAND_W_FACTOR * self.L / 2 if self.w is None else self.w
        return EggParams(self.L / 2, self.B / 2, w)


REQUIRED_COLUMNS = ("L", "B", "A", "w")
# optional column holding a previously published model area, compared if present
REFERENCE_COLUMN = "A_egg"


class MissingColumnError(ValueError):
    pass


def read_table(lines: Iterable[str]) -> tuple[list[FitRecord], list[str]]:
    """Parse a sewer-profile CSV. Returns (records, warnings).

    Rows that fail to parse are skipped and reported in ``warnings``.
    """
    reader = csv.DictReader(lines)
    header = [h.strip() for h in (reader.fieldnames or [])]
    missing = [c for c in REQUIRED_COLUMNS if c not in header]
    if missing:
        raise MissingColumnError(f"missing column(s): {', '.join(missing)}")
    records: list[FitRecord] = []
    warnings: list[str] = []
    for line_no, raw in enumerate(reader, start=2):
        row = {k.strip(): (v or "").strip() for k, v in raw.items() if k is not None}
        try:
            ref = row.get(REFERENCE_COLUMN)
            s = row.get("S")
            records.append(FitRecord(
                L=float(row["L"]), B=float(row["B"]), observed=float(row["A"]), w=float(row["w"]),
                no=row.get("No.") or row.get("No") or None,
                S=float(s) if s else None,
                reference=float(ref) if ref else None,
            ))
        except (TypeError, ValueError) as exc:
            warnings.append(f"line {line_no}: skipped ({exc})")
    return records, warnings


def evaluate_table(records: list[FitRecord]) -> float | None:
    """Fill in ``predicted`` for every record and return R^2 (None if undefined).

    Tabulated areas are the observations and model areas the predictions.
    For the bundled Cleveland table this gives 0.999152; swapping the roles
    gives 0.999178, which is the figure usually quoted for that table.
    """
    for rec in records:
        rec.predicted = area_egg(rec.params).total
    try:
        return r_squared([r.observed for r in records], [r.predicted for r in records])
    except StatisticsError:
        return None


def bundled_table_path() -> Path:
    return Path(str(resources.files("eggcurve") / "data" / "table1.csv"))


def load_bundled_table() -> list[FitRecord]:
    with open(bundled_table_path(), encoding="utf-8", newline="") as fh:
        records, _ = read_table(fh)
    return records
