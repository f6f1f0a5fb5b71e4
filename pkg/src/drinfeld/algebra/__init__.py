"""Exact arithmetic: F_q, A = F_q[T], A/n, F_q(T), Laurent series, and
polynomials over F_q(T)."""

from .factor import factorize, is_prime, squarefree_kernel
from .field import GF, field, prime_power
from .parse import ParseError, parse_poly
from .poly import NEG_INF, NonUnitError, Poly, T, irreducible_monic, monic_polys
from .ratfunc import RatFunc, as_ratfunc
from .residue import Residue, crt_join, crt_split
from .series import PrecisionError, Series
from .upoly import (
    UPoly,
    nonsquare_part,
    radical,
    squarefree_decomposition,
    squarefree_part,
    upoly_gcd,
)

__all__ = [
    "GF", "field", "prime_power", "Poly", "T", "NEG_INF", "NonUnitError",
    "monic_polys", "irreducible_monic", "RatFunc", "as_ratfunc", "Residue",
    "crt_split", "crt_join", "Series", "PrecisionError", "UPoly", "radical",
    "squarefree_part", "squarefree_decomposition", "nonsquare_part",
    "upoly_gcd", "factorize", "is_prime", "squarefree_kernel", "parse_poly",
    "ParseError",
]
