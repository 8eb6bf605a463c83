"""The Hügelschäffer egg curve.

The egg-shaped branch over [-a, a] is

    y = +/- b * sqrt((a^2 - x^2) / (a^2 + 2 w x + w^2)),

the planar section z = 0 of the surface

    x^2/a^2 + (y^2 + z^2)/b^2 * g(x) = 1,   g(x) = 1 + (2 w x + w^2)/a^2.

For w > 0 the same branch can be written in canonical cubic form
H * sqrt((alpha - x)(x - beta)/(x - gamma)); that form is kept here as a
cross-check because gamma and H diverge as w -> 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CanonicalUndefinedError,
    DegenerateCurveError,
    DomainError,
    HyperbolicBranchError,
    InvalidParameterError,
)

# |w - a| below this multiple of a is treated as the degenerate (w == a) case.
DEGENERACY_RTOL = 1e-9


@dataclass(frozen=True)
class EggParams:
    """Semi-length ``a``, semi-breadth ``b`` and asymmetry offset ``w``."""

    a: float
    b: float
    w: float = 0.0

    def __post_init__(self):
        for name in ("a", "b", "w"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise InvalidParameterError(f"{name} must be a real number, got {v!r}")
            if not math.isfinite(v):
                raise InvalidParameterError(f"{name} must be finite, got {v!r}")
        if self.a <= 0:
            raise InvalidParameterError("a must be positive")
        if self.b <= 0:
            raise InvalidParameterError("b must be positive")
        if self.w < 0:
            raise InvalidParameterError("w must be non-negative")

    @property
    def degenerate(self) -> bool:
        """True when w sits inside the band around a where the cubic degenerates."""
        return abs(self.w - self.a) < DEGENERACY_RTOL * self.a

    @property
    def shape_index(self) -> float:
        return self.b / self.a

    def scaled(self, k: float) -> "EggParams":
        return EggParams(k * self.a, k * self.b, k * self.w)


@dataclass(frozen=True)
class CanonicalForm:
    alpha: float
    beta: float
    gamma: float
    H: float


def _require_nondegenerate(params: EggParams) -> None:
    if params.degenerate:
        raise DegenerateCurveError(
            f"w={params.w} equals a={params.a}: the cubic degenerates"
        )


def canonical(params: EggParams) -> CanonicalForm:
    """Canonical constants (alpha, beta, gamma, H) of the cubic.

    gamma == beta exactly when w == a; callers check ``params.degenerate``.
    """
    a, b, w = params.a, params.b, params.w
    if w == 0:
        raise CanonicalUndefinedError("canonical form needs w > 0 (gamma and H diverge)")
    return CanonicalForm(alpha=a, beta=-a, gamma=-(a * a + w * w) / (2 * w), H=b / math.sqrt(2 * w))


def _denominator(params: EggParams, x: float) -> float:
    # a^2 + 2wx + w^2 written as a sum of non-negative terms on [-a, a]
    a, w = params.a, params.w
    return (a - w) ** 2 + 2 * w * (a + x)


def _check_x(params: EggParams, x: float) -> None:
    a = params.a
    if not -a <= x <= a:
        if params.w > 0 and not params.degenerate and x < canonical(params).gamma:
            raise HyperbolicBranchError(
                f"x={x} lies on the hyperbolic branch (x < gamma); only [-a, a] is supported"
            )
        raise DomainError(f"x={x} outside [-{a}, {a}]")
    if params.degenerate and x == -a:
        raise DegenerateCurveError("f1(-a) is 0/0 when w == a")


def f1(params: EggParams, x: float) -> float:
    """Upper branch of the egg over [-a, a]; ``-f1`` is the lower branch."""
    _check_x(params, x)
    a = params.a
    num = (a - x) * (a + x)
    return params.b * math.sqrt(num / _denominator(params, x))


def f2(params: EggParams, x: float) -> float:
    return -f1(params, x)


def f1_canonical(params: EggParams, x: float) -> float:
    """``H * sqrt((alpha - x)(x - beta)/(x - gamma))``, for cross-checking :func:`f1`."""
    _check_x(params, x)
    c = canonical(params)
    return c.H * math.sqrt((c.alpha - x) * (x - c.beta) / (x - c.gamma))


def f1_times_slope(params: EggParams, x: float) -> float:
    """f1(x) * f1'(x) = (1/2) d(f1^2)/dx, finite on all of [-a, a]."""
    _check_x(params, x)
    a, b, w = params.a, params.b, params.w
    g = _denominator(params, x)
    return -b * b * (x + w) * (w * x + a * a) / (g * g)


def f1_slope(params: EggParams, x: float) -> float:
    """Analytic derivative of :func:`f1`; infinite at the tips x = +/-a."""
    y = f1(params, x)
    if y == 0.0:
        return -math.inf if x > 0 else math.inf
    return f1_times_slope(params, x) / y


def max_abscissa(params: EggParams) -> float:
    """Abscissa u of the widest point: -w for w < a, -a^2/w for w > a."""
    a, w = params.a, params.w
    _require_nondegenerate(params)
    if w == 0:
        return 0.0
    if w < a:
        return -w
    return -a * a / w


def phi_psi(params: EggParams, x: float) -> tuple[float, float]:
    """The auxiliary functions phi(x) and psi(x) on [beta, alpha].

    Both lie in [0, 1]; they coincide where the curve is widest.
    """
    if params.w == 0:
        raise CanonicalUndefinedError("phi and psi need w > 0")
    _require_nondegenerate(params)
    c = canonical(params)
    if not c.beta <= x <= c.alpha:
        raise DomainError(f"x={x} outside [{c.beta}, {c.alpha}]")
    phi = math.sqrt((c.alpha - c.gamma) * (x - c.beta) / ((c.alpha - c.beta) * (x - c.gamma)))
    psi = math.sqrt((c.alpha - x) / (c.alpha - c.beta))
    return phi, psi


def implicit_residual(params: EggParams, x: float, y: float, z: float) -> float:
    """Left side minus right side of the implicit surface equation."""
    a, b, w = params.a, params.b, params.w
    g = 1.0 + (2 * w * x + w * w) / (a * a)
    return x * x / (a * a) + (y * y + z * z) / (b * b) * g - 1.0
