"""
Laurent Polynomials - Exact integer Laurent polynomials in q^(1/D)

Exponents are stored as integers scaled by denom_scale, so the term (k, c)
means c * q^(k/D). The scale is always reduced to the smallest D that
represents the value, which makes structural equality value equality.
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from ..errors import IntegralityError

Exponent = Fraction | int


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients"""

    denom_scale: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.denom_scale <= 0:
            raise ValueError(f"denom_scale must be positive, got {self.denom_scale}")
        merged: dict[int, int] = {}
        for exponent, coefficient in self.terms:
            merged[exponent] = merged.get(exponent, 0) + coefficient
        cleaned = sorted((e, c) for e, c in merged.items() if c)
        scale = self.denom_scale
        if not cleaned:
            scale = 1
        else:
            common = scale
            for exponent, _ in cleaned:
                common = gcd(common, exponent)
                if common == 1:
                    break
            if common > 1:
                scale //= common
                cleaned = [(e // common, c) for e, c in cleaned]
        object.__setattr__(self, "denom_scale", scale)
        object.__setattr__(self, "terms", tuple(cleaned))

    # === Constructors ===

    @classmethod
    def from_scaled(cls, terms: Mapping[int, int], denom_scale: int = 1) -> "LaurentPoly":
        """Build from a scaled-exponent to coefficient mapping"""
        return cls(denom_scale, tuple(terms.items()))

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls(1, ((0, value),))

    @classmethod
    def monomial(cls, exponent: Exponent, coefficient: int = 1) -> "LaurentPoly":
        """coefficient * q^exponent for a rational exponent"""
        exp = Fraction(exponent)
        return cls(exp.denominator, ((exp.numerator, coefficient),))

    # === Inspection ===

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_unit(self) -> bool:
        """True for ±q^k, the only invertible elements"""
        return len(self.terms) == 1 and self.terms[0][1] in (1, -1)

    def items(self) -> Iterator[tuple[Fraction, int]]:
        """Terms as (rational exponent, coefficient), increasing exponent"""
        for exponent, coefficient in self.terms:
            yield Fraction(exponent, self.denom_scale), coefficient

    def coefficient(self, exponent: Exponent) -> int:
        exp = Fraction(exponent)
        if self.denom_scale % exp.denominator:
            return 0
        scaled = exp.numerator * (self.denom_scale // exp.denominator)
        return dict(self.terms).get(scaled, 0)

    def min_exponent(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return Fraction(self.terms[0][0], self.denom_scale)

    def max_exponent(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return Fraction(self.terms[-1][0], self.denom_scale)

    def scaled(self, denom_scale: int) -> dict[int, int]:
        """Terms rescaled to a multiple of the stored scale"""
        if denom_scale % self.denom_scale:
            raise ValueError(f"cannot rescale 1/{self.denom_scale} exponents to 1/{denom_scale}")
        factor = denom_scale // self.denom_scale
        return {e * factor: c for e, c in self.terms}

    def evaluate_at_one(self) -> int:
        """Classical limit q = 1"""
        return sum(c for _, c in self.terms)

    # === Ring operations ===

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        other = _coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        scale = lcm(self.denom_scale, other.denom_scale)
        merged = self.scaled(scale)
        for exponent, coefficient in other.scaled(scale).items():
            merged[exponent] = merged.get(exponent, 0) + coefficient
        return LaurentPoly.from_scaled(merged, scale)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.denom_scale, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 1:
                return self
            return LaurentPoly(self.denom_scale, tuple((e, c * other) for e, c in self.terms))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        scale = lcm(self.denom_scale, other.denom_scale)
        left = self.scaled(scale)
        right = other.scaled(scale)
        product: dict[int, int] = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_scaled(product, scale)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit")
        exponent, coefficient = self.terms[0]
        return LaurentPoly(self.denom_scale, ((-exponent, coefficient),))

    def exact_div(self, other: "LaurentPoly | int") -> "LaurentPoly":
        """Quotient self / other, which must be a Laurent polynomial"""
        divisor = _coerce(other)
        if not divisor.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return ZERO
        scale = lcm(self.denom_scale, divisor.denom_scale)
        remainder = self.scaled(scale)
        den = divisor.scaled(scale)
        den_top = max(den)
        den_lead = den[den_top]
        lowest_shift = min(remainder) - min(den)
        quotient: dict[int, int] = {}
        while remainder:
            top = max(remainder)
            shift = top - den_top
            coefficient, rest = divmod(remainder[top], den_lead)
            if shift < lowest_shift or rest:
                raise IntegralityError(f"{self} is not divisible by {divisor}")
            quotient[shift] = coefficient
            for exponent, value in den.items():
                key = exponent + shift
                updated = remainder.get(key, 0) - coefficient * value
                if updated:
                    remainder[key] = updated
                else:
                    remainder.pop(key, None)
        return LaurentPoly.from_scaled(quotient, scale)

    def bar(self) -> "LaurentPoly":
        """Bar involution q -> q^-1"""
        return LaurentPoly(self.denom_scale, tuple((-e, c) for e, c in self.terms))

    def substitute_power(self, power: int) -> "LaurentPoly":
        """q -> q^power"""
        return LaurentPoly(self.denom_scale, tuple((e * power, c) for e, c in self.terms))

    # === Rendering ===

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exponent, coefficient in reversed(list(self.items())):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                body = ("" if magnitude == 1 else str(magnitude)) + _format_power(exponent)
            if not parts:
                parts.append(("-" if coefficient < 0 else "") + body)
            else:
                parts.append((" - " if coefficient < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json(self) -> list[list[int]]:
        """[numerator_exponent, denominator_exponent, coefficient], decreasing exponent"""
        return [[e.numerator, e.denominator, c] for e, c in reversed(list(self.items()))]

    @classmethod
    def from_json(cls, triples: Iterable[Iterable[int]]) -> "LaurentPoly":
        result = ZERO
        for numerator, denominator, coefficient in (tuple(t) for t in triples):
            result = result + cls.monomial(Fraction(numerator, denominator), coefficient)
        return result


def _format_power(exponent: Fraction) -> str:
    if exponent == 1:
        return "q"
    if exponent.denominator == 1:
        return f"q^{exponent.numerator}"
    return f"q^({exponent.numerator}/{exponent.denominator})"


def _coerce(value: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.constant(value)


ZERO = LaurentPoly(1, ())
ONE = LaurentPoly(1, ((0, 1),))


def q_power(exponent: Exponent, coefficient: int = 1) -> LaurentPoly:
    """Shorthand for coefficient * q^exponent"""
    return LaurentPoly.monomial(exponent, coefficient)


# === Quantum integers ===


def quantum_integer(n: int, d: int = 1) -> LaurentPoly:
    """[n]_{q^d} = q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}, with [-n] = -[n]"""
    if d <= 0:
        raise ValueError(f"quantum integer base must be positive, got {d}")
    if n < 0:
        return -quantum_integer(-n, d)
    return LaurentPoly.from_scaled({d * (n - 1 - 2 * k): 1 for k in range(n)})


def quantum_factorial(n: int, d: int = 1) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"quantum factorial of negative {n}")
    result = ONE
    for k in range(2, n + 1):
        result = result * quantum_integer(k, d)
    return result


def quantum_binomial(n: int, k: int, d: int = 1) -> LaurentPoly:
    """Gaussian binomial [n choose k]_{q^d}; the quotient is always exact"""
    if k < 0 or k > n:
        return ZERO
    numerator = ONE
    for j in range(n - k + 1, n + 1):
        numerator = numerator * quantum_integer(j, d)
    return numerator.exact_div(quantum_factorial(k, d))
