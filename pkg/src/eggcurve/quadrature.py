"""One-dimensional quadrature.

Two adaptive schemes sit behind :func:`integrate`:

* ``"adaptive"`` - globally adaptive 7/15-point Gauss-Kronrod subdivision,
  for smooth integrands.
* ``"double-exponential"`` - tanh-sinh with level halving, for integrands
  whose derivatives blow up at the endpoints (sqrt-type behaviour).

:func:`simpson_fixed` is the plain composite Simpson rule on a fixed grid.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError, DomainError, EvaluationError

DEFAULT_TOL = 1e-10
MAX_DEPTH = 60
MAX_DE_LEVEL = 12
# Cap on the number of live subintervals; protects against runaway
# subdivision on integrands that are not actually integrable.
_MAX_INTERVALS = 4000
# Largest tanh-sinh abscissa parameter: there 1 - tanh(pi/2 sinh t) ~ 1e-300,
# so endpoint mass is not truncated for integrable singularities.
_DE_T_MAX = math.asinh(math.log(2e300) / math.pi)

ADAPTIVE = "adaptive"
DOUBLE_EXPONENTIAL = "double-exponential"
METHODS = (ADAPTIVE, DOUBLE_EXPONENTIAL)

# Kronrod extension of the 7-point Gauss rule, nodes in decreasing order.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for nodes _XGK[1], _XGK[3], _XGK[5], _XGK[7].
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.error_estimate < 0:
            raise ValueError("error_estimate must be non-negative")
        if self.evaluations <= 0:
            raise ValueError("evaluations must be positive")


class _Counted:
    """Wraps an integrand: counts calls and rejects non-finite values."""

    def __init__(self, f: Callable[[float], float]):
        self.f = f
        self.calls = 0

    def __call__(self, *args: float) -> float:
        self.calls += 1
        y = self.f(*args)
        x = args[0]
        if not math.isfinite(y):
            raise EvaluationError(f"integrand is not finite at x={x!r}: {y!r}")
        return y


def _target(tol: float, value: float) -> float:
    return tol * max(1.0, abs(value))


def _gk15(f: _Counted, lo: float, hi: float) -> tuple[float, float]:
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fc = f(center)
    kronrod = fc * _WGK[7]
    gauss = fc * _WG[3]
    for j in range(7):
        dx = half * _XGK[j]
        pair = f(center - dx) + f(center + dx)
        kronrod += _WGK[j] * pair
        if j % 2 == 1:
            gauss += _WG[j // 2] * pair
    return kronrod * half, abs(kronrod - gauss) * half


def _adaptive(f: _Counted, lo: float, hi: float, tol: float) -> tuple[float, float]:
    value, err = _gk15(f, lo, hi)
    # max-heap on error: (-err, lo, hi, value, depth)
    heap = [(-err, lo, hi, value, 0)]
    total, total_err = value, err
    while total_err > _target(tol, total):
        neg_err, a, b, v, depth = heapq.heappop(heap)
        if depth >= MAX_DEPTH or len(heap) >= _MAX_INTERVALS:
            heapq.heappush(heap, (neg_err, a, b, v, depth))
            raise ConvergenceError(
                f"adaptive quadrature stalled at depth {depth} "
                f"(estimate {total!r}, error {total_err:.3g})",
                best=QuadratureResult(total, total_err, f.calls),
            )
        mid = 0.5 * (a + b)
        v1, e1 = _gk15(f, a, mid)
        v2, e2 = _gk15(f, mid, b)
        heapq.heappush(heap, (-e1, a, mid, v1, depth + 1))
        heapq.heappush(heap, (-e2, mid, b, v2, depth + 1))
        # re-summing avoids drift from repeated add/subtract
        total = math.fsum(item[3] for item in heap)
        total_err = math.fsum(-item[0] for item in heap)
    return total, total_err


def _tanh_sinh(
    f: _Counted, lo: float, hi: float, tol: float, with_distances: bool
) -> tuple[float, float]:
    half = 0.5 * (hi - lo)
    width = hi - lo
    # Abscissae are generated as distances from the nearest endpoint so that
    # samples crowding the ends keep full relative precision.
    def contribution(t: float) -> float:
        u = 0.5 * math.pi * math.sinh(t)
        cu = math.cosh(u)
        d = 1.0 / (math.exp(u) * cu)  # = 1 - tanh(u) for u >= 0
        weight = 0.5 * math.pi * math.cosh(t) / (cu * cu)
        near = half * d
        s = 0.0
        if with_distances:
            if near > 0.0:
                s = f(hi - near, width - near, near) + f(lo + near, near, width - near)
        else:
            x_right = hi - near
            x_left = lo + near
            if x_right < hi:
                s += f(x_right)
            if x_left > lo:
                s += f(x_left)
        return weight * s

    t_max = _DE_T_MAX
    h = 1.0
    mid = 0.5 * (lo + hi)
    total = 0.5 * math.pi * (f(mid, half, half) if with_distances else f(mid))
    k = 1
    while k * h <= t_max:
        total += contribution(k * h)
        k += 1
    estimate = total * h * half
    err = math.inf
    for level in range(1, MAX_DE_LEVEL + 1):
        h *= 0.5
        # only the new (odd) nodes are evaluated at each halving
        k = 1
        fresh = 0.0
        while k * h <= t_max:
            fresh += contribution(k * h)
            k += 2
        total += fresh
        new_estimate = total * h * half
        err = abs(new_estimate - estimate)
        estimate = new_estimate
        if level >= 3 and err <= _target(tol, estimate):
            return estimate, err
    raise ConvergenceError(
        f"tanh-sinh did not converge by level {MAX_DE_LEVEL} "
        f"(estimate {estimate!r}, error {err:.3g})",
        best=QuadratureResult(estimate, err, f.calls),
    )


def integrate(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
    method: str = ADAPTIVE,
    endpoint_distances: bool = False,
) -> QuadratureResult:
    """Integrate ``f`` over ``[lo, hi]``.

    The target accuracy is ``tol * max(1, |value|)``, i.e. relative for large
    integrals and absolute for small ones.

    Args:
        f: Integrand, called with one float.
        lo, hi: Finite limits with ``lo < hi``.
        tol: Positive tolerance.
        method: ``"adaptive"`` or ``"double-exponential"``.
        endpoint_distances: double-exponential only. When set, ``f`` is
            called as ``f(x, x - lo, hi - x)`` with both distances accurate
            to full relative precision, which is what an integrand with a
            singularity at a non-zero endpoint needs (``hi - x`` cannot be
            recovered from ``x`` once it drops below ``eps * |hi|``).

    Raises:
        DomainError: bad limits, tolerance or method name.
        EvaluationError: ``f`` returned inf/nan at a sample.
        ConvergenceError: tolerance not met; ``.best`` holds the last estimate.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise DomainError(f"need finite lo < hi, got [{lo}, {hi}]")
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if endpoint_distances and method != DOUBLE_EXPONENTIAL:
        raise DomainError("endpoint_distances is only supported by the double-exponential method")
    counted = _Counted(f)
    if method == ADAPTIVE:
        value, err = _adaptive(counted, lo, hi, tol)
    elif method == DOUBLE_EXPONENTIAL:
        value, err = _tanh_sinh(counted, lo, hi, tol, endpoint_distances)
    else:
        raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")
    return QuadratureResult(value, err, counted.calls)


def simpson_fixed(f: Callable[[float], float], lo: float, hi: float, n_points: int) -> float:
    """Composite Simpson rule on ``n_points`` equally spaced samples (odd, >= 3)."""
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    if n_points < 3 or n_points % 2 == 0:
        raise DomainError(f"n_points must be odd and >= 3, got {n_points}")
    g = _Counted(f)
    n = n_points - 1
    h = (hi - lo) / n
    acc = g(lo) + g(hi)
    for i in range(1, n):
        acc += (4.0 if i % 2 else 2.0) * g(lo + i * h)
    return acc * h / 3.0
