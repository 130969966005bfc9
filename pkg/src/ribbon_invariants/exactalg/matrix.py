"""
Sparse Matrices - Column-major exact operators with hashable basis keys

Rows and columns are addressed by basis keys (ints for a single module,
tuples for tensor products), never by dense positions. Zero entries are
never stored.
"""

from collections.abc import Hashable, Iterable, Iterator, Mapping
from typing import Any

from .laurent import ONE, LaurentPoly

Key = Hashable
Vector = dict[Key, LaurentPoly]


def add_scaled(target: Vector, source: Mapping[Key, LaurentPoly], scale: LaurentPoly = ONE) -> None:
    """target += scale * source, in place, dropping cancelled entries"""
    for key, value in source.items():
        updated = target.get(key)
        term = value if scale is ONE else value * scale
        updated = term if updated is None else updated + term
        if updated.is_zero():
            target.pop(key, None)
        else:
            target[key] = updated


def clean(vector: Mapping[Key, LaurentPoly]) -> Vector:
    return {key: value for key, value in vector.items() if not value.is_zero()}


class SparseMatrix:
    """Operator stored as column key -> {row key -> entry}"""

    __slots__ = ("_columns",)

    def __init__(self, columns: Mapping[Key, Mapping[Key, LaurentPoly]] | None = None):
        self._columns: dict[Key, Vector] = {}
        for column, entries in (columns or {}).items():
            kept = clean(entries)
            if kept:
                self._columns[column] = kept

    @classmethod
    def identity(cls, keys: Iterable[Key]) -> "SparseMatrix":
        return cls({key: {key: ONE} for key in keys})

    @classmethod
    def diagonal(cls, entries: Mapping[Key, LaurentPoly]) -> "SparseMatrix":
        return cls({key: {key: value} for key, value in entries.items()})

    # === Access ===

    def column(self, key: Key) -> Mapping[Key, LaurentPoly]:
        return self._columns.get(key, {})

    def columns(self) -> Iterator[tuple[Key, Mapping[Key, LaurentPoly]]]:
        yield from self._columns.items()

    def entry(self, row: Key, column: Key) -> LaurentPoly | None:
        return self._columns.get(column, {}).get(row)

    def entries(self) -> Iterator[tuple[Key, Key, LaurentPoly]]:
        for column, entries in self._columns.items():
            for row, value in entries.items():
                yield row, column, value

    def nnz(self) -> int:
        return sum(len(entries) for entries in self._columns.values())

    def is_zero(self) -> bool:
        return not self._columns

    # === Algebra ===

    def apply(self, vector: Mapping[Key, LaurentPoly]) -> Vector:
        result: Vector = {}
        for key, value in vector.items():
            column = self._columns.get(key)
            if column:
                add_scaled(result, column, value)
        return result

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        """Composition: (self @ other)(v) = self(other(v))"""
        return SparseMatrix({key: self.apply(column) for key, column in other.columns()})

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        merged = {key: dict(column) for key, column in self._columns.items()}
        for key, column in other.columns():
            add_scaled(merged.setdefault(key, {}), column)
        return SparseMatrix(merged)

    def __neg__(self) -> "SparseMatrix":
        return self.scaled(LaurentPoly.constant(-1))

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scaled(self, factor: LaurentPoly) -> "SparseMatrix":
        return SparseMatrix(
            {key: {row: v * factor for row, v in column.items()} for key, column in self.columns()}
        )

    def transpose(self) -> "SparseMatrix":
        rows: dict[Key, Vector] = {}
        for row, column, value in self.entries():
            rows.setdefault(row, {})[column] = value
        return SparseMatrix(rows)

    def exact_div(self, divisor: LaurentPoly) -> "SparseMatrix":
        return SparseMatrix(
            {
                key: {row: v.exact_div(divisor) for row, v in column.items()}
                for key, column in self.columns()
            }
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self._columns == other._columns

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SparseMatrix(columns={len(self._columns)}, nnz={self.nnz()})"

    # === Serialization ===

    def to_json(self) -> list[list[Any]]:
        """[row, column, laurent triples] per stored entry; tuple keys become lists"""
        return [
            [_key_to_json(row), _key_to_json(column), value.to_json()]
            for row, column, value in self.entries()
        ]

    @classmethod
    def from_json(cls, payload: Iterable[list[Any]]) -> "SparseMatrix":
        columns: dict[Key, Vector] = {}
        for row, column, triples in payload:
            entries = columns.setdefault(_key_from_json(column), {})
            entries[_key_from_json(row)] = LaurentPoly.from_json(triples)
        return cls(columns)


def _key_to_json(key: Key) -> Any:
    if isinstance(key, tuple):
        return [_key_to_json(part) for part in key]
    return key


def _key_from_json(value: Any) -> Key:
    if isinstance(value, list):
        return tuple(_key_from_json(part) for part in value)
    return value
