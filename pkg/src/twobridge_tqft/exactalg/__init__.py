"""Exact arithmetic: rationals, polynomials, quotient rings, Laurent polynomials."""
from .poly import Rational, UniPoly, ZERO_DEGREE, format_poly, poly_gcd, is_squarefree
from .quotient import QuotientRing, QuotientElem, quotient_invert, quotient_trace
from .gaussian import GaussianPoly
from .laurent import LaurentBiPoly, laurent_mul, newton_polygon

__all__ = [
    "Rational", "UniPoly", "ZERO_DEGREE", "format_poly", "poly_gcd", "is_squarefree",
    "QuotientRing", "QuotientElem", "quotient_invert", "quotient_trace",
    "GaussianPoly", "LaurentBiPoly", "laurent_mul", "newton_polygon",
]
