"""
Colour-2 Unknot - Poincare series of the sl2 unknot labelled 2

The self-Ext of the labelled simple splits as K, then Tor over
A = K[y1,y2]/(y1^2,y2^2) of M = A/(y1+y2) with itself, then K, each piece
shifted. A Tor class in homological degree i and internal degree d
contributes (-t)^i q^-d and a shift [a](b) multiplies by (-t)^a q^b.
"""

import logging
from dataclasses import dataclass

from ..exactalg import ONE, ZERO, BiGradedSeries, LaurentPoly, TPolynomial, q_power
from ..exactalg.ratfunc import RatFunc
from ..exactalg.series import polynomial_series, series_from_rational
from .graded import GradedModule, quotient_module, residue_field, truncated_polynomial_algebra
from .resolution import TorTable, tor_bigraded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Shift:
    homological: int
    internal: int

    def monomial(self) -> tuple[int, LaurentPoly]:
        """(t-exponent, q-coefficient) of (-t)^a q^b"""
        sign = -1 if self.homological % 2 else 1
        return self.homological, q_power(self.internal, sign)


# Coevaluation shift for lambda = 2 omega: [-2 rho^vee(lambda)](2 <lambda, rho>)
GLOBAL_SHIFT = Shift(-2, 2)
PIECE_SHIFTS = (Shift(0, 0), Shift(2, -2), Shift(4, -4))


def middle_module() -> GradedModule:
    """A/(y1 + y2)A"""
    algebra = truncated_polynomial_algebra(2)
    return quotient_module(algebra, [{"y1": 1, "y2": 1}])


def table_series(table: TorTable, shift: Shift) -> dict[int, LaurentPoly]:
    """Contribution of a Tor table placed at a shift, as t-exponent -> q-coefficient"""
    exponent, coefficient = shift.monomial()
    terms: dict[int, LaurentPoly] = {}
    for (i, d), dim in table.entries.items():
        sign = -1 if i % 2 else 1
        term = q_power(-d, sign * dim) * coefficient
        terms[i + exponent] = terms.get(i + exponent, ZERO) + term
    return terms


def unknot_series(t_max: int) -> BiGradedSeries:
    """The three shifted pieces summed through t^t_max"""
    if t_max < 4:
        raise ValueError("t_max must be at least 4")
    global_exponent, global_coefficient = GLOBAL_SHIFT.monomial()
    ground = residue_field(truncated_polynomial_algebra(0))
    module = middle_module()
    tables = (
        tor_bigraded(ground, ground, 0),
        tor_bigraded(module, module, t_max - global_exponent - PIECE_SHIFTS[1].homological),
        tor_bigraded(ground, ground, 0),
    )
    coeffs: dict[int, LaurentPoly] = {}
    for table, shift in zip(tables, PIECE_SHIFTS, strict=True):
        for k, value in table_series(table, shift).items():
            coeffs[k + global_exponent] = coeffs.get(k + global_exponent, ZERO) + (
                value * global_coefficient
            )
    logger.debug("assembled unknot series through t^%d", t_max)
    return BiGradedSeries(min(coeffs), t_max, coeffs)


# === Closed form ===


def closed_form_parts() -> tuple[TPolynomial, TPolynomial, TPolynomial]:
    """q^2 t^-2 + 1 + q^-2 t^2 plus (q^-2 - q^-2 t) / (1 - q^-4 t^2)"""
    polynomial = {-2: q_power(2), 0: ONE, 2: q_power(-2)}
    numerator = {0: q_power(-2), 1: q_power(-2, -1)}
    denominator = {0: ONE, 2: q_power(-4, -1)}
    return polynomial, numerator, denominator


def closed_form_series(t_max: int) -> BiGradedSeries:
    polynomial, numerator, denominator = closed_form_parts()
    return polynomial_series(polynomial, t_max) + series_from_rational(
        numerator, denominator, t_max
    )


def euler_specialization(
    polynomial: TPolynomial, numerator: TPolynomial, denominator: TPolynomial
) -> RatFunc:
    """polynomial + numerator / denominator at t = 1"""

    def at_one(terms: TPolynomial) -> LaurentPoly:
        return sum(terms.values(), ZERO)

    return RatFunc(at_one(polynomial)) + RatFunc(at_one(numerator), at_one(denominator))


def closed_form_mismatches(t_max: int, assembled: BiGradedSeries | None = None) -> list[int]:
    """t-exponents at which the assembled series and the closed form disagree"""
    assembled = assembled or unknot_series(t_max)
    expected = closed_form_series(t_max)
    low = min(assembled.t_min, expected.t_min)
    return [
        k for k in range(low, t_max + 1) if assembled.coefficient(k) != expected.coefficient(k)
    ]
