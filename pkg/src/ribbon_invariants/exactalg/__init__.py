"""Exact arithmetic over Z[q^(1/D), q^(-1/D)] and its fraction field"""

from .laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    q_power,
    quantum_binomial,
    quantum_factorial,
    quantum_integer,
)
from .matrix import SparseMatrix, Vector, add_scaled
from .ratfunc import RatFunc
from .series import BiGradedSeries, TPolynomial, polynomial_series, series_from_rational

__all__ = [
    "ONE",
    "ZERO",
    "BiGradedSeries",
    "LaurentPoly",
    "RatFunc",
    "SparseMatrix",
    "TPolynomial",
    "Vector",
    "add_scaled",
    "polynomial_series",
    "q_power",
    "quantum_binomial",
    "quantum_factorial",
    "quantum_integer",
    "series_from_rational",
]
