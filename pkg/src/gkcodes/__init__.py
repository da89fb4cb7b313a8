"""Exact censuses, incidence geometry, and dual evaluation codes of a
maximal curve over F_{l^6} at desk scale (l = 2, 3)."""

__version__ = "0.1.0"

from .errors import GKError, BudgetExceeded
from .field import Field, make_field, parse_ell

__all__ = [
    "GKError",
    "BudgetExceeded",
    "Field",
    "make_field",
    "parse_ell",
    "__version__",
]
