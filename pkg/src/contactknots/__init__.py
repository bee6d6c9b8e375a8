"""Contact geometry on S^3, braids, cables, Lorenz knots and exact knot-group algebra."""

__version__ = "0.1.0"

from .braid import BraidWord, alexander_from_braid, transverse_invariants  # noqa: E402
from .errors import ContactKnotsError, DomainError, EvaluationError, ParameterError  # noqa: E402
from .laurent import LaurentPolynomial  # noqa: E402

__all__ = [
    "BraidWord",
    "ContactKnotsError",
    "DomainError",
    "EvaluationError",
    "LaurentPolynomial",
    "ParameterError",
    "alexander_from_braid",
    "transverse_invariants",
    "__version__",
]
