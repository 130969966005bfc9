"""
Rational Functions - Fraction field over Laurent polynomials in q^(1/D)

Used only as scratch space for exact elimination. Values are kept
gcd-reduced with the denominator's top coefficient positive and any
monomial factor of the denominator moved into the numerator, so equality
is structural.
"""

from dataclasses import dataclass
from math import lcm

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

from ..errors import IntegralityError
from .laurent import ONE, ZERO, LaurentPoly

_RING, _X = ring("x", ZZ)


def _to_poly(terms: dict[int, int]) -> PolyElement:
    return _RING.from_dict({(exponent,): coefficient for exponent, coefficient in terms.items()})


def _from_poly(poly: PolyElement, shift: int, denom_scale: int) -> LaurentPoly:
    return LaurentPoly.from_scaled(
        {monom[0] + shift: int(coefficient) for monom, coefficient in poly.items()}, denom_scale
    )


def _reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return ZERO, ONE
    if den.is_unit():
        return num * den.unit_inverse(), ONE
    scale = lcm(num.denom_scale, den.denom_scale)
    top = num.scaled(scale)
    bottom = den.scaled(scale)
    top_low = min(top)
    bottom_low = min(bottom)
    _, top_poly, bottom_poly = _to_poly({e - top_low: c for e, c in top.items()}).cofactors(
        _to_poly({e - bottom_low: c for e, c in bottom.items()})
    )
    if bottom_poly.LC < 0:
        top_poly, bottom_poly = -top_poly, -bottom_poly
    return (
        _from_poly(top_poly, top_low - bottom_low, scale),
        _from_poly(bottom_poly, 0, scale),
    )


@dataclass(frozen=True, slots=True)
class RatFunc:
    """num/den in lowest terms"""

    num: LaurentPoly
    den: LaurentPoly = ONE

    def __post_init__(self) -> None:
        if self.den == ONE:
            return
        num, den = _reduce(self.num, self.den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, value: "RatFunc | LaurentPoly | int") -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, int):
            return cls(LaurentPoly.constant(value))
        return cls(value)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == ONE

    def to_laurent(self) -> LaurentPoly:
        """The value as a Laurent polynomial; raises if a denominator survives"""
        if self.den != ONE:
            raise IntegralityError(f"({self.num})/({self.den}) is not a Laurent polynomial")
        return self.num

    def __add__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        rhs = RatFunc.of(other)
        if rhs.num.is_zero():
            return self
        if self.num.is_zero():
            return rhs
        if self.den == rhs.den:
            return RatFunc(self.num + rhs.num, self.den)
        return RatFunc(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        return self + (-RatFunc.of(other))

    def __rsub__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        return RatFunc.of(other) + (-self)

    def __mul__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        rhs = RatFunc.of(other)
        if self.num.is_zero() or rhs.num.is_zero():
            return RatFunc(ZERO)
        return RatFunc(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        return self * RatFunc.of(other).inverse()

    def __rtruediv__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        return RatFunc.of(other) * self.inverse()

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"
