"""regcore: exact integral closures, adjoints, multiplicities and cores
of finite-colength ideals and modules over k[x,y] localized at (x,y)."""

from .field import QQ, PrimeField, field_from_name
from .poly import Monomial, Poly, parse_poly
from .staircase import MonomialIdeal
from .trunc import TruncatedIdeal

__version__ = "0.1.0"

__all__ = [
    "QQ", "PrimeField", "field_from_name",
    "Monomial", "Poly", "parse_poly",
    "MonomialIdeal", "TruncatedIdeal",
    "__version__",
]
