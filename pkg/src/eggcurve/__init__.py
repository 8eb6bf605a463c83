"""Area, volume and surface area of the Hügelschäffer egg curve."""

from .area import AreaBreakdown, area_egg, area_numeric_oracle, area_specialized, ellipse_area
from .curve import EggParams, canonical, f1, f2, max_abscissa
from .errors import (AmbiguityError, ConvergenceError, DegenerateCurveError, DivergenceError,
                     DomainError, EggError, InvalidParameterError, OutOfRangeError)
from .inverse import (SolveReport, cleveland_params, r_squared, solve_w_for_area,
                      solve_w_for_volume)
from .quadrature import QuadratureResult, integrate, simpson_fixed
from .report import ShapeReport, build_report
from .solid import (surface_area_egg, surface_area_simpson3, volume_egg,
                    volume_numeric_oracle)
from .special import carlson_rd, carlson_rf, ellip_e, ellip_f

__version__ = "0.1.0"
