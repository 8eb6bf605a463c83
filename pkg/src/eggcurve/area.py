"""Planar area enclosed by the egg-shaped branch.

The area splits at the widest abscissa u into a left part A1 (over
[-a, u]) and a right part A2 (over [u, a]). Each part is a closed form in
the incomplete elliptic integrals E and F with modulus
p = sqrt((alpha - beta)/(alpha - gamma)) and amplitude
kappa = lambda = arcsin sqrt((alpha - u)/(alpha - beta)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .curve import EggParams, canonical, f1, max_abscissa, phi_psi
from .errors import DegenerateCurveError
from .quadrature import DOUBLE_EXPONENTIAL, QuadratureResult, integrate
from .special import ellip_e, ellip_f

ELLIPSE_LIMIT = "ellipse-limit"
SMALL_W_SERIES = "small-w-series"

# Below this w/a the elliptic closed form loses about eps*(a/w)^2 to
# cancellation, so the even power series in w/a takes over.
SERIES_RATIO = 1e-2
# |asin argument| may overshoot 1 by rounding; larger overshoots are bugs.
_CLAMP_SLACK = 1e-14


@dataclass(frozen=True)
class AreaBreakdown:
    a1: float
    a2: float
    total: float
    p: float
    kappa: float
    lambda_: float
    u: float
    flags: frozenset = field(default_factory=frozenset)


def ellipse_area(a: float, b: float) -> float:
    return math.pi * a * b


def _asin_clamped(s: float) -> float:
    if s > 1.0 + _CLAMP_SLACK or s < -_CLAMP_SLACK:
        raise ArithmeticError(f"asin argument {s!r} out of range beyond rounding slack")
    return math.asin(min(1.0, max(0.0, s)))


def _series_area(params: EggParams) -> float:
    # A = 2ab * sum_m r^(2m) * int_{-1}^{1} sqrt(1 - s^2) P_2m(s) ds, r = w/a
    r2 = (params.w / params.a) ** 2
    coef = 0.5 * math.pi
    total = coef
    power = 1.0
    m = 0
    while True:
        coef *= (2 * m - 1) * (2 * m + 1) / ((2 * m + 2) * (2 * m + 4))
        power *= r2
        term = coef * power
        total += term
        m += 1
        if abs(term) < 1e-18 * abs(total):
            break
    return 2.0 * params.a * params.b * total


def _split_difference(params: EggParams) -> float:
    """A2 - A1, which has a rational closed form on each side of w = a."""
    a, b, w = params.a, params.b, params.w
    if w < a:
        return 8.0 * b * w / 3.0
    return 8.0 * a**3 * b / (3.0 * w * w)


def area_egg(params: EggParams) -> AreaBreakdown:
    """Exact area of the egg and its split at the widest point.

    At w == 0 the ellipse area pi*a*b is returned with the ``ellipse-limit``
    flag. For 0 < w/a < 1e-2 the total comes from a convergent power series
    and the split from the closed-form difference A2 - A1 (``small-w-series``).

    Raises:
        DegenerateCurveError: w == a (within the degeneracy band).
    """
    a, b, w = params.a, params.b, params.w
    if params.degenerate:
        raise DegenerateCurveError(f"area undefined at w == a (w={w}, a={a})")
    if w == 0:
        half = 0.5 * ellipse_area(a, b)
        return AreaBreakdown(half, half, 2 * half, 0.0, math.pi / 4, math.pi / 4, 0.0,
                             frozenset({ELLIPSE_LIMIT}))

    c = canonical(params)
    alpha, beta, gamma, H = c.alpha, c.beta, c.gamma, c.H
    u = max_abscissa(params)
    p = math.sqrt((alpha - beta) / (alpha - gamma))
    phi_u, psi_u = phi_psi(params, u)
    kappa = _asin_clamped(phi_u)
    lam = _asin_clamped(psi_u)

    if w < SERIES_RATIO * a:
        total = _series_area(params)
        diff = _split_difference(params)
        return AreaBreakdown(0.5 * (total - diff), 0.5 * (total + diff), total, p, kappa, lam, u,
                             frozenset({SMALL_W_SERIES}))

    scale = 4.0 / 3.0 * H
    root = math.sqrt(alpha - gamma)
    elliptic_k = root * ((alpha + beta - 2 * gamma) * ellip_e(kappa, p) - 2 * (beta - gamma) * ellip_f(kappa, p))
    elliptic_l = root * ((alpha + beta - 2 * gamma) * ellip_e(lam, p) - 2 * (beta - gamma) * ellip_f(lam, p))
    a1 = scale * (elliptic_k + (u + gamma - alpha - beta) * math.sqrt((alpha - u) * (u - beta) / (u - gamma)))
    a2 = scale * (elliptic_l - math.sqrt((alpha - u) * (u - beta) * (u - gamma)))
    return AreaBreakdown(a1, a2, a1 + a2, p, kappa, lam, u)


def area_specialized(params: EggParams) -> AreaBreakdown:
    """Area from the fully substituted closed forms in a, b, w.

    An independent transcription of the same result as :func:`area_egg`,
    used to cross-check it.
    """
    a, b, w = params.a, params.b, params.w
    if params.degenerate:
        raise DegenerateCurveError(f"area undefined at w == a (w={w}, a={a})")
    if w == 0:
        return area_egg(params)
    p = 2.0 * math.sqrt(a * w) / (a + w)
    if w < a:
        u = -w
        angle = math.asin(math.sqrt((a + w) / (2 * a)))
    else:
        u = -a * a / w
        angle = math.asin(math.sqrt((a + w) / (2 * w)))
    common = 2 * (a + w) * b / (3 * w) * (
        (a * a + w * w) / w * ellip_e(angle, p) - (a - w) ** 2 / w * ellip_f(angle, p)
    )
    if w < a:
        a1 = common - 2 * b / (3 * w) * (a * a + 3 * w * w)
        a2 = common - 2 * b / (3 * w) * (a * a - w * w)
    else:
        a1 = common - 2 * a * b / (3 * w * w) * (3 * a * a + w * w)
        a2 = common - 2 * a * b / (3 * w * w) * (w * w - a * a)
    return AreaBreakdown(a1, a2, a1 + a2, p, angle, angle, u)


def area_numeric_oracle(params: EggParams, tol: float = 1e-11) -> QuadratureResult:
    """2 * integral of f1 over [-a, a] by tanh-sinh quadrature."""
    if params.degenerate:
        raise DegenerateCurveError(f"area undefined at w == a (w={params.w}, a={params.a})")
    a = params.a
    return integrate(lambda x: 2.0 * f1(params, x), -a, a, tol=tol, method=DOUBLE_EXPONENTIAL)
