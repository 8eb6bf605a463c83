"""Exception hierarchy shared by the numerical modules and the CLI."""

from __future__ import annotations


class EggError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(EggError, ValueError):
    """Model parameters violate a basic invariant (a > 0, b > 0, w >= 0, finite)."""


class DomainError(EggError, ValueError):
    """An argument lies outside the domain where the function is defined."""


class HyperbolicBranchError(DomainError):
    """Evaluation requested on the open hyperbolic branch of the cubic."""


class DivergenceError(EggError, ArithmeticError):
    """The requested integral diverges for the given arguments."""


class DegenerateCurveError(EggError, ArithmeticError):
    """w == a (within the degeneracy band): the cubic degenerates."""


class CanonicalUndefinedError(EggError, ArithmeticError):
    """w == 0: gamma and H of the canonical form diverge."""


class EvaluationError(EggError, ArithmeticError):
    """An integrand returned a non-finite value at a sample point."""


class ConvergenceError(EggError, ArithmeticError):
    """Iteration or quadrature did not reach its tolerance.

    The best available estimate is kept on the exception so callers can
    still inspect it.
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class SurfaceMismatchError(ConvergenceError):
    """The x-domain and t-domain surface integrals disagree."""

    def __init__(self, message: str, x_value: float, t_value: float, best=None):
        super().__init__(message, best)
        self.x_value = x_value
        self.t_value = t_value


class OutOfRangeError(EggError, ValueError):
    """Target value cannot be reached by any w in the search range."""

    def __init__(self, message: str, bounds: tuple[float, float]):
        super().__init__(message)
        self.bounds = bounds


class AmbiguityError(EggError, ValueError):
    """The objective changes sign more than once inside the bracket."""

    def __init__(self, message: str, candidates: list[float]):
        super().__init__(message)
        self.candidates = candidates


class StatisticsError(EggError, ValueError):
    """Inputs to a goodness-of-fit statistic are unusable."""
