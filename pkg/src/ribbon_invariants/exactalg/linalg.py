"""
Exact Linear Algebra - Elimination over the fraction field

Columns come in as sparse Laurent vectors keyed by row labels. They are
moved into sympy's fraction field Z(x) with x = q^(1/D), D the common
exponent scale, reduced there with DomainMatrix, and converted back to
RatFunc or Laurent polynomials where the caller requires integrality.
"""

from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass
from math import lcm
from typing import Any

from sympy import ZZ, Symbol
from sympy.polys.matrices import DomainMatrix

from .laurent import ONE, ZERO, LaurentPoly
from .ratfunc import RatFunc

_DOMAIN = ZZ.frac_field(Symbol("x"))
_FIELD = _DOMAIN.field
_RING = _FIELD.ring
_X = _RING.gens[0]

_RZERO = RatFunc(ZERO)
_RONE = RatFunc(ONE)


# === Conversion ===


def _common_scale(rows: Sequence[Sequence[LaurentPoly]]) -> int:
    return lcm(1, *(value.denom_scale for row in rows for value in row))


def _to_field(value: LaurentPoly, scale: int) -> Any:
    terms = value.scaled(scale)
    if not terms:
        return _DOMAIN.zero
    low = min(terms)
    numer = _RING.from_dict({(e - low,): c for e, c in terms.items()})
    if low >= 0:
        return _FIELD.new(numer * _X**low)
    return _FIELD.new(numer, _X ** (-low))


def _from_field(element: Any, scale: int) -> RatFunc:
    num = LaurentPoly.from_scaled({m[0]: int(c) for m, c in element.numer.items()}, scale)
    den = LaurentPoly.from_scaled({m[0]: int(c) for m, c in element.denom.items()}, scale)
    return RatFunc(num, den)


def _domain_matrix(rows: Sequence[Sequence[LaurentPoly]], scale: int) -> DomainMatrix:
    width = len(rows[0]) if rows else 0
    return DomainMatrix(
        [[_to_field(value, scale) for value in row] for row in rows], (len(rows), width), _DOMAIN
    )


def _row_keys(columns: Sequence[Mapping[Hashable, LaurentPoly]]) -> list[Hashable]:
    keys: dict[Hashable, None] = {}
    for column in columns:
        keys.update(dict.fromkeys(column))
    return list(keys)


def _rows(
    columns: Sequence[Mapping[Hashable, LaurentPoly]], keys: Sequence[Hashable]
) -> list[list[LaurentPoly]]:
    return [[column.get(key, ZERO) for column in columns] for key in keys]


# === Operations ===


def solve(
    columns: Sequence[Mapping[Hashable, LaurentPoly]],
    target: Mapping[Hashable, LaurentPoly],
) -> list[RatFunc] | None:
    """
    Coordinates x with sum_j x_j columns[j] = target, or None if target is
    outside the column span. Free variables of dependent columns are set to 0.
    """
    width = len(columns)
    keys = _row_keys([*columns, target])
    if not keys:
        return [_RZERO] * width
    rows = _rows([*columns, target], keys)
    scale = _common_scale(rows)
    reduced, pivots = _domain_matrix(rows, scale).rref()
    if width in pivots:
        return None
    entries = reduced.to_list()
    solution = [_RZERO] * width
    for r, col in enumerate(pivots):
        solution[col] = _from_field(entries[r][width] / entries[r][col], scale)
    return solution


def rank(columns: Sequence[Mapping[Hashable, LaurentPoly]]) -> int:
    keys = _row_keys(columns)
    if not keys:
        return 0
    rows = _rows(columns, keys)
    return int(_domain_matrix(rows, _common_scale(rows)).rank())


def nullspace(columns: Sequence[Mapping[Hashable, LaurentPoly]]) -> list[list[RatFunc]]:
    """Basis of {x : sum_j x_j columns[j] = 0}, one coordinate list per vector"""
    width = len(columns)
    keys = _row_keys(columns)
    if not keys:
        return [[_RONE if i == j else _RZERO for i in range(width)] for j in range(width)]
    rows = _rows(columns, keys)
    scale = _common_scale(rows)
    reduced, pivots = _domain_matrix(rows, scale).rref()
    entries = reduced.to_list()
    basis = []
    for free in (c for c in range(width) if c not in pivots):
        vector = [_RZERO] * width
        vector[free] = _RONE
        for r, col in enumerate(pivots):
            vector[col] = _from_field(-entries[r][free] / entries[r][col], scale)
        basis.append(vector)
    return basis


def inverse_with_determinant(
    matrix: Sequence[Sequence[LaurentPoly]],
) -> tuple[list[list[RatFunc]], RatFunc]:
    """Inverse of a square matrix, together with its determinant"""
    scale = _common_scale(matrix)
    square = _domain_matrix(matrix, scale)
    det = square.det()
    if det == _DOMAIN.zero:
        raise ZeroDivisionError("singular matrix")
    inverse = [[_from_field(value, scale) for value in row] for row in square.inv().to_list()]
    return inverse, _from_field(det, scale)


def determinant(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a square Laurent matrix (0 when singular)"""
    if not matrix:
        return ONE
    scale = _common_scale(matrix)
    return _from_field(_domain_matrix(matrix, scale).det(), scale).to_laurent()


@dataclass(frozen=True)
class LeftInverse:
    """
    A left inverse of a full-column-rank Laurent matrix, kept as an integral
    adjugate over a common denominator so applying it is exact division.
    """

    rows: tuple[Hashable, ...]
    numerators: tuple[tuple[LaurentPoly, ...], ...]
    denominator: LaurentPoly

    def apply(self, images: Mapping[Hashable, LaurentPoly]) -> list[LaurentPoly]:
        picked = [images.get(row, ZERO) for row in self.rows]
        result = []
        for numerator_row in self.numerators:
            total = ZERO
            for coefficient, value in zip(numerator_row, picked, strict=True):
                if coefficient and value:
                    total = total + coefficient * value
            result.append(total.exact_div(self.denominator))
        return result


def left_inverse(columns: Sequence[Mapping[Hashable, LaurentPoly]]) -> LeftInverse:
    """Select the first independent rows and invert that square block"""
    keys = _row_keys(columns)
    rows = _rows(columns, keys)
    if not rows:
        raise ValueError("columns are linearly dependent")
    _, chosen = _domain_matrix(rows, _common_scale(rows)).transpose().rref()
    if len(chosen) < len(columns):
        raise ValueError("columns are linearly dependent")
    inverse, det = inverse_with_determinant([rows[r] for r in chosen])
    denominator = det.to_laurent()
    numerators = tuple(
        tuple((value * denominator).to_laurent() for value in row) for row in inverse
    )
    return LeftInverse(tuple(keys[r] for r in chosen), numerators, denominator)
