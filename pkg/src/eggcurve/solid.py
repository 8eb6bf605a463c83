"""Solid of revolution of the egg about its long axis.

Volume has a closed form with a log term. The lateral surface area is an
integral that is evaluated by quadrature; after the shift x = t + gamma its
integrand becomes sqrt(Q5(t))/t^2 for a quintic Q5 with vanishing linear
coefficient. A three-point Simpson rule on that form collapses to a closed
expression in a, b, w.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curve import EggParams, f1, f1_times_slope
from .errors import CanonicalUndefinedError, DegenerateCurveError, SurfaceMismatchError
from .quadrature import ADAPTIVE, DOUBLE_EXPONENTIAL, QuadratureResult, integrate, simpson_fixed

PARABOLOID_LIMIT = "paraboloid-limit"

# Below this w/a the closed-form volume cancels to eps*(a/w)^2 and the
# even power series in w/a is used instead.
VOLUME_SERIES_RATIO = 5e-2
# The t-domain cross-check loses digits to cancellation in Q5 as w -> 0 and
# as w -> a; it is skipped when w/a or |w - a|/a falls below this.
_T_CHECK_RATIO = 1e-3


# ---- limit shapes ----------------------------------------------------------

def spheroid_volume(a: float, b: float) -> float:
    return 4.0 * math.pi * a * b * b / 3.0


def paraboloid_volume(a: float, b: float) -> float:
    return math.pi * a * b * b


def paraboloid_area(a: float, b: float) -> float:
    """Lateral area of the paraboloid of height ``a`` and base radius ``b``."""
    return b * math.pi / (24 * a * a) * ((16 * a * a + b * b) ** 1.5 - b**3)


def spheroid_area(a: float, b: float) -> float:
    """Exact surface area of the spheroid with polar semi-axis ``a``, equatorial ``b``."""
    if a == b:
        return 4.0 * math.pi * a * a
    if a > b:
        # prolate
        e = math.sqrt((a - b) * (a + b)) / a
        ratio = math.asin(e) / e if e > 1e-8 else 1.0 + e * e / 6.0
        return 2.0 * math.pi * b * b + 2.0 * math.pi * a * b * ratio
    # oblate
    e = math.sqrt((b - a) * (b + a)) / b
    ratio = math.atanh(e) / e if e > 1e-8 else 1.0 + e * e / 3.0
    return 2.0 * math.pi * b * b + 2.0 * math.pi * a * a * ratio


# ---- volume -----------------------------------------------------------------

def _series_volume(params: EggParams) -> float:
    # V = (4/3) pi a b^2 * sum_j d_j r^(2j), d_j = -3/((2j+3)(2j+1)(2j-1))
    r2 = (params.w / params.a) ** 2
    total = 0.0
    power = 1.0
    j = 0
    while True:
        term = -3.0 / ((2 * j + 3) * (2 * j + 1) * (2 * j - 1)) * power
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
        power *= r2
        j += 1
    return spheroid_volume(params.a, params.b) * total


def volume_egg(params: EggParams) -> float:
    """Volume of the egg solid; total on a > 0, b > 0, w >= 0.

    Spheroid at w == 0, paraboloid inside the w == a degeneracy band.
    """
    a, b, w = params.a, params.b, params.w
    if w == 0:
        return spheroid_volume(a, b)
    if params.degenerate:
        return paraboloid_volume(a, b)
    if w < VOLUME_SERIES_RATIO * a:
        return _series_volume(params)
    d = (a - w) * (a + w)
    log_term = math.log(abs(a - w) / (a + w))
    return math.pi * b * b / (4 * w**3) * (d * d * log_term + 2 * a * w * (a * a + w * w))


def volume_numeric_oracle(params: EggParams, tol: float = 1e-11) -> QuadratureResult:
    """pi * integral of f1^2 over [-a, a] by adaptive Gauss-Kronrod."""
    a, b, w = params.a, params.b, params.w

    # f1^2 written out: a rational function, smooth on the closed interval
    def integrand(x: float) -> float:
        return math.pi * b * b * (a - x) * (a + x) / ((a - w) ** 2 + 2 * w * (a + x))

    return integrate(integrand, -a, a, tol=tol, method=ADAPTIVE)


# ---- surface ----------------------------------------------------------------

@dataclass(frozen=True)
class Quintic:
    """Coefficients of Q5(t) = a5 t^5 + a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0."""

    a5: float
    a4: float
    a3: float
    a2: float
    a1: float
    a0: float

    def __call__(self, t: float) -> float:
        acc = self.a5
        for c in (self.a4, self.a3, self.a2, self.a1, self.a0):
            acc = acc * t + c
        return acc


def quintic_coeffs(params: EggParams) -> Quintic:
    a, b, w = params.a, params.b, params.w
    if w == 0:
        raise CanonicalUndefinedError("Q5 needs w > 0; integrate in x instead")
    d2 = (a * a - w * w) ** 2
    return Quintic(
        a5=-32.0 * w**3,
        a4=4.0 * w * w * (8 * a * a + b * b + 8 * w * w),
        a3=-8.0 * w * d2,
        a2=-2.0 * b * b * d2,
        a1=0.0,
        a0=b * b / (4 * w * w) * d2 * d2,
    )


def t_limits(params: EggParams) -> tuple[float, float]:
    """Image of [-a, a] under t = x - gamma."""
    a, w = params.a, params.w
    if w == 0:
        raise CanonicalUndefinedError("t-domain needs w > 0")
    return (a - w) ** 2 / (2 * w), (a + w) ** 2 / (2 * w)


def surface_integrand_x(params: EggParams, x: float) -> float:
    """2 pi f1 sqrt(1 + f1'^2), written to stay finite at the tips."""
    y = f1(params, x)
    yy = f1_times_slope(params, x)
    return 2.0 * math.pi * math.sqrt(y * y + yy * yy)


def _surface_integrand_gaps(params: EggParams, ap: float, am: float) -> float:
    # Same integrand in terms of ap = a + x and am = a - x, which the
    # quadrature supplies exactly; near w == a the cap lives at ap ~ 1e-12.
    a, b, w = params.a, params.b, params.w
    s = a - w
    g = s * s + 2 * w * ap
    y2 = b * b * ap * am / g
    yy = -b * b * (ap - s) * (w * ap + a * s) / (g * g)
    return 2.0 * math.pi * math.sqrt(y2 + yy * yy)


def surface_integrand_t(params: EggParams, t: float, quintic: Quintic | None = None) -> float:
    """(b pi / 4 w^2) sqrt(Q5(t)) / t^2."""
    q = quintic or quintic_coeffs(params)
    val = q(t)
    # Q5 >= 0 on the interval; clip rounding noise only
    return params.b * math.pi / (4 * params.w**2) * math.sqrt(max(val, 0.0)) / (t * t)


def _cap_width(params: EggParams) -> float:
    # Near w == a the blunt end flattens into a cap of this width in x.
    return (params.a - params.w) ** 2 / (2 * params.w)


def _integrate_pieces(g, length: float, cap: float, tol: float) -> QuadratureResult:
    """tanh-sinh of ``g(s, length - s)`` over s in [0, length].

    Integrating in the gap variable keeps both gaps exact however narrow the
    cap is. When the cap is narrow the range is split at s = 64*cap so each
    piece sees its feature at a sane scale.
    """
    split = 64.0 * cap
    pieces = [(0.0, length)] if split >= 0.5 * length else [(0.0, split), (split, length)]
    value = err = 0.0
    calls = 0
    for p_lo, p_hi in pieces:
        off_hi = length - p_hi
        res = integrate(lambda s, dl, dr: g(p_lo + dl, off_hi + dr), p_lo, p_hi, tol=tol,
                        method=DOUBLE_EXPONENTIAL, endpoint_distances=True)
        value += res.value
        err += res.error_estimate
        calls += res.evaluations
    return QuadratureResult(value, err, calls)


def _surface_x_domain(params: EggParams, tol: float) -> QuadratureResult:
    a = params.a
    return _integrate_pieces(lambda ap, am: _surface_integrand_gaps(params, ap, am),
                             2 * a, _cap_width(params), tol)


def _surface_t_domain(params: EggParams, tol: float) -> QuadratureResult:
    q = quintic_coeffs(params)
    lo, hi = t_limits(params)
    # x = -a maps to t = lo, and lo equals the cap width
    return _integrate_pieces(lambda dl, dr: surface_integrand_t(params, lo + dl, q), hi - lo, lo, tol)


def surface_area_egg(params: EggParams, tol: float = 1e-10) -> QuadratureResult:
    """Lateral surface area of the egg solid.

    Integrated in x by tanh-sinh; for w not too small the t-domain (quintic)
    form is integrated as well and the two must agree to 10*tol. The
    spheroid (w == 0) and paraboloid (w == a) cases use closed forms.

    Note the paraboloid value is the lateral area only. Just outside the
    degeneracy band the blunt end is a nearly flat cap of radius ~b, so the
    integral there approaches the paraboloid area plus pi*b^2.

    Raises:
        SurfaceMismatchError: the two integration routes disagree.
        ConvergenceError: quadrature failed.
    """
    a, b, w = params.a, params.b, params.w
    if w == 0:
        return QuadratureResult(spheroid_area(a, b), 0.0, 1)
    if params.degenerate:
        return QuadratureResult(paraboloid_area(a, b), 0.0, 1)
    x_res = _surface_x_domain(params, tol)
    if w >= _T_CHECK_RATIO * a and abs(w - a) >= _T_CHECK_RATIO * a:
        t_res = _surface_t_domain(params, tol)
        if abs(t_res.value - x_res.value) > 10 * tol * max(1.0, abs(x_res.value)):
            raise SurfaceMismatchError(
                f"surface integrals disagree: x-domain {x_res.value!r}, t-domain {t_res.value!r}",
                x_value=x_res.value, t_value=t_res.value, best=x_res,
            )
    return x_res


def surface_area_simpson3(params: EggParams) -> float:
    """Closed-form three-point Simpson estimate of the surface area."""
    a, b, w = params.a, params.b, params.w
    if params.degenerate:
        raise DegenerateCurveError("three-point Simpson surface has a (a - w)^2 denominator")
    s = a * a + w * w
    return math.pi * a / 3.0 * (
        2 * a * b * b / (a - w) ** 2
        + 8 * a * b / (s * s) * math.sqrt(s**3 + a * a * b * b * w * w)
        + 2 * a * b * b / (a + w) ** 2
    )


def surface_area_simpson3_generic(params: EggParams) -> float:
    """The same three-point estimate, from a generic Simpson rule in t."""
    q = quintic_coeffs(params)
    lo, hi = t_limits(params)
    return simpson_fixed(lambda t: surface_integrand_t(params, t, q), lo, hi, 3)
