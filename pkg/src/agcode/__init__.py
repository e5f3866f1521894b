"""One-point algebraic geometry codes on y^q + mu*y = f(x): construction, parameter
bounds, brute-force verification and derived quantum, convolutional and
locally recoverable codes.
"""

from .codes import Bound, OnePointCode, build_code, dual_code, ghw, min_distance, param_report
from .curve import CurveInfo, CurveSpec, rr_basis, validate_curve
from .errors import AGCodeError
from .field import FieldElement, FieldSpec, make_field
from .io import load_curve
from .linalg import LinearCode
from .semigroup import NumericalSemigroup

__all__ = [
    "AGCodeError", "Bound", "CurveInfo", "CurveSpec", "FieldElement", "FieldSpec", "LinearCode",
    "NumericalSemigroup", "OnePointCode", "build_code", "dual_code", "ghw", "load_curve",
    "make_field", "min_distance", "param_report", "rr_basis", "validate_curve",
]
