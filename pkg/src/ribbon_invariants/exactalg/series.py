"""
Bigraded Series - Truncated power series in t with Laurent coefficients in q

Carrier for Poincare series. Coefficients above t_max are unknown rather
than zero, so reads past the truncation raise.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from .laurent import ZERO, LaurentPoly

TPolynomial = Mapping[int, LaurentPoly]


@dataclass(frozen=True)
class BiGradedSeries:
    """sum_k coeffs[k] t^k for t_min <= k <= t_max"""

    t_min: int
    t_max: int
    coeffs: dict[int, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        kept = {
            k: v for k, v in sorted(self.coeffs.items()) if self.t_min <= k <= self.t_max and v
        }
        object.__setattr__(self, "coeffs", kept)

    @property
    def truncation_order(self) -> int:
        return self.t_max

    def coefficient(self, k: int) -> LaurentPoly:
        if k > self.t_max:
            raise ValueError(f"coefficient of t^{k} is beyond the truncation order {self.t_max}")
        return self.coeffs.get(k, ZERO)

    def __add__(self, other: "BiGradedSeries") -> "BiGradedSeries":
        t_max = min(self.t_max, other.t_max)
        merged: dict[int, LaurentPoly] = dict(self.coeffs)
        for k, v in other.coeffs.items():
            merged[k] = merged.get(k, ZERO) + v
        return BiGradedSeries(min(self.t_min, other.t_min), t_max, merged)

    def times_polynomial(self, poly: TPolynomial) -> "BiGradedSeries":
        """Product with a polynomial in t having nonnegative exponents"""
        if any(k < 0 for k in poly):
            raise ValueError("multiplier must have nonnegative t-exponents")
        product: dict[int, LaurentPoly] = {}
        for k, v in self.coeffs.items():
            for j, w in poly.items():
                product[k + j] = product.get(k + j, ZERO) + v * w
        return BiGradedSeries(self.t_min, self.t_max, product)

    def to_text(self) -> str:
        """One 't^k: coefficient' line per nonzero term"""
        lines = [f"t^{k}: {v}" for k, v in self.coeffs.items()]
        lines.append(f"+ O(t^{self.t_max + 1})")
        return "\n".join(lines)

    def to_json(self) -> dict[str, Any]:
        return {
            "t_min": self.t_min,
            "t_max": self.t_max,
            "coeffs": {str(k): v.to_json() for k, v in self.coeffs.items()},
        }


def polynomial_series(poly: TPolynomial, t_max: int) -> BiGradedSeries:
    """A polynomial in t viewed as a series truncated at t_max"""
    t_min = min((k for k, v in poly.items() if v), default=0)
    return BiGradedSeries(min(t_min, t_max), t_max, dict(poly))


def series_from_rational(num: TPolynomial, den: TPolynomial, t_max: int) -> BiGradedSeries:
    """
    Expand num/den as a series in t through t^t_max.

    The lowest t-coefficient of den must be a unit ±q^k.
    """
    den_terms = {k: v for k, v in den.items() if v}
    if not den_terms:
        raise ZeroDivisionError("denominator series is zero")
    den_low = min(den_terms)
    lowest = den_terms[den_low]
    if not lowest.is_unit():
        raise ValueError(f"lowest t-coefficient {lowest} of the denominator is not invertible")
    inverse = lowest.unit_inverse()
    num_terms = {k: v for k, v in num.items() if v}
    if not num_terms:
        return BiGradedSeries(min(0, t_max), t_max, {})
    t_min = min(num_terms) - den_low
    coeffs: dict[int, LaurentPoly] = {}
    for k in range(t_min, t_max + 1):
        acc = num_terms.get(k + den_low, ZERO)
        for exponent, value in den_terms.items():
            step = exponent - den_low
            if step and (k - step) in coeffs:
                acc = acc - value * coeffs[k - step]
        coeffs[k] = acc * inverse
    return BiGradedSeries(min(t_min, t_max), t_max, coeffs)
