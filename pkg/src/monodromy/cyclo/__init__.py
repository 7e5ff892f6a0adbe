"""Exact cyclotomic arithmetic, quadratic extensions and certified numerics."""

from .field import (CycElem, CyclotomicError, cyc_arith, cyc_make, cyclotomic_poly,
                    galois_conjugates, totient, units)
from .minpoly import galois_orbit, minimal_polynomial
from .numeric import (ComplexInterval, NotRealError, Sign, double_error_bound, double_value,
                      numeric_interval, sign_decide)
from .poly import RationalPoly, cyclotomic_index
from .quadratic import ExtElem
from .serialize import from_json, to_json

__all__ = [
    "CycElem", "CyclotomicError", "ExtElem", "RationalPoly", "ComplexInterval", "Sign",
    "NotRealError", "cyc_make", "cyc_arith", "cyclotomic_poly", "galois_conjugates",
    "galois_orbit", "minimal_polynomial", "numeric_interval", "sign_decide", "totient",
    "units", "cyclotomic_index", "double_value", "double_error_bound", "to_json", "from_json",
]
