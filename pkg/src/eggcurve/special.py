"""Incomplete elliptic integrals of the first and second kind.

Both integrals use the sine-amplitude convention

    F(theta, p) = int_0^{sin theta} dt / sqrt((1 - t^2)(1 - p^2 t^2))
    E(theta, p) = int_0^{sin theta} sqrt(1 - p^2 t^2) / sqrt(1 - t^2) dt

with theta in [0, pi/2] and p^2 in [0, 1]. They are assembled from
Carlson's symmetric integrals R_F and R_D, which are evaluated by the
duplication theorem followed by a fifth-order Taylor tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergenceError, DomainError

# Duplication stops once every argument sits within this relative distance
# of the running mean; the truncated tail is then far below 1e-14.
_SPREAD_TOL = 1e-7
_MAX_DUPLICATIONS = 200


@dataclass(frozen=True)
class EllipticArgs:
    """Validated (amplitude, modulus) pair."""

    theta: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.p)):
            raise DomainError(f"non-finite elliptic arguments ({self.theta}, {self.p})")
        if not 0.0 <= self.theta <= math.pi / 2:
            raise DomainError(f"theta={self.theta} outside [0, pi/2]")
        if self.p * self.p > 1.0:
            raise DomainError(f"p={self.p} has p^2 > 1")


def _check_args(*args: float) -> None:
    for v in args:
        if not math.isfinite(v):
            raise DomainError(f"non-finite Carlson argument {v}")
        if v < 0.0:
            raise DomainError(f"negative Carlson argument {v}")


def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson's symmetric integral of the first kind.

    R_F(x, y, z) = 1/2 int_0^inf dt / sqrt((t + x)(t + y)(t + z)).

    Raises:
        DomainError: an argument is negative or non-finite.
        DivergenceError: two or more arguments are zero.
    """
    _check_args(x, y, z)
    if (x == 0.0) + (y == 0.0) + (z == 0.0) >= 2:
        raise DivergenceError("R_F diverges when two arguments vanish")

    mean = (x + y + z) / 3.0
    for _ in range(_MAX_DUPLICATIONS):
        spread = max(abs(mean - x), abs(mean - y), abs(mean - z))
        if spread < _SPREAD_TOL * mean:
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        mean = 0.25 * (mean + lam)
    else:  # pragma: no cover - duplication contracts by 4x per step
        raise DivergenceError("R_F duplication failed to contract")

    dx = (mean - x) / mean
    dy = (mean - y) / mean
    dz = -(dx + dy)
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    tail = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0
    return tail / math.sqrt(mean)


def carlson_rd(x: float, y: float, z: float) -> float:
    """Carlson's degenerate integral of the second kind.

    R_D(x, y, z) = 3/2 int_0^inf dt / ((t + z) sqrt((t + x)(t + y)(t + z))),
    symmetric in x and y only.

    Raises:
        DomainError: an argument is negative or non-finite.
        DivergenceError: z == 0 or x == y == 0.
    """
    _check_args(x, y, z)
    if z == 0.0 or (x == 0.0 and y == 0.0):
        raise DivergenceError("R_D diverges for z == 0 or x == y == 0")

    mean = (x + y + 3.0 * z) / 5.0
    acc = 0.0
    scale = 1.0
    for _ in range(_MAX_DUPLICATIONS):
        spread = max(abs(mean - x), abs(mean - y), abs(mean - z))
        if spread < _SPREAD_TOL * mean:
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        acc += scale / (sz * (z + lam))
        scale *= 0.25
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        mean = 0.25 * (mean + lam)
    else:  # pragma: no cover
        raise DivergenceError("R_D duplication failed to contract")

    dx = (mean - x) / mean
    dy = (mean - y) / mean
    dz = -(dx + dy) / 3.0
    xy = dx * dy
    zz = dz * dz
    e2 = xy - 6.0 * zz
    e3 = (3.0 * xy - 8.0 * zz) * dz
    e4 = 3.0 * (xy - zz) * zz
    e5 = xy * zz * dz
    tail = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )
    return scale * tail / (mean * math.sqrt(mean)) + 3.0 * acc


def ellip_f(theta: float, p: float) -> float:
    """Incomplete elliptic integral of the first kind F(theta, p)."""
    args = EllipticArgs(theta, p)
    s = math.sin(args.theta)
    c = math.cos(args.theta)
    m = args.p * args.p
    if s == 0.0:
        return 0.0
    if m == 1.0 and args.theta == math.pi / 2:
        raise DivergenceError("F(pi/2, 1) is infinite")
    if m == 0.0:
        return args.theta
    return s * carlson_rf(c * c, 1.0 - m * s * s, 1.0)


def ellip_e(theta: float, p: float) -> float:
    """Incomplete elliptic integral of the second kind E(theta, p)."""
    args = EllipticArgs(theta, p)
    s = math.sin(args.theta)
    c = math.cos(args.theta)
    m = args.p * args.p
    if s == 0.0:
        return 0.0
    if m == 0.0:
        return args.theta
    if m == 1.0:
        # integrand collapses to 1
        return s
    cc = c * c
    delta = 1.0 - m * s * s
    return s * carlson_rf(cc, delta, 1.0) - (m / 3.0) * s**3 * carlson_rd(cc, delta, 1.0)
