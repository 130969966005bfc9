"""
Graded Algebras - Finite-dimensional graded local algebras and their modules

Everything is over Q with sympy matrices. Basis vectors are homogeneous, so
a graded subspace is handled one internal degree at a time.
"""

import itertools
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from sympy import Matrix, Rational, zeros

logger = logging.getLogger(__name__)

# (i, j) -> {k: c} meaning b_i * b_j = sum_k c b_k
StructureConstants = dict[tuple[int, int], dict[int, Rational]]


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    """Commutative or not, with a homogeneous basis and a unit"""

    labels: tuple[str, ...]
    degrees: tuple[int, ...]
    mult: StructureConstants
    unit: int = 0

    @property
    def dim(self) -> int:
        return len(self.labels)

    def product(self, i: int, j: int) -> dict[int, Rational]:
        return self.mult.get((i, j), {})

    def radical(self) -> list[int]:
        """Positive-degree basis vectors"""
        return [k for k, d in enumerate(self.degrees) if d > 0]

    def is_local(self) -> bool:
        """The degree-0 part is spanned by the unit and degrees are nonnegative"""
        return all(d >= 0 for d in self.degrees) and [
            k for k, d in enumerate(self.degrees) if d == 0
        ] == [self.unit]

    def element(self, coefficients: Mapping[str, int | Rational]) -> Matrix:
        """Coordinate column of an element written by basis label"""
        column = zeros(self.dim, 1)
        for label, value in coefficients.items():
            column[self.labels.index(label)] = Rational(value)
        return column

    def check_axioms(self) -> list[str]:
        failures = []
        basis = range(self.dim)
        for i in basis:
            if self.product(self.unit, i) != {i: 1} or self.product(i, self.unit) != {i: 1}:
                failures.append(f"unit law fails on {self.labels[i]}")
        for i, j in itertools.product(basis, repeat=2):
            for k in self.product(i, j):
                if self.degrees[k] != self.degrees[i] + self.degrees[j]:
                    failures.append(f"{self.labels[i]}*{self.labels[j]} is not homogeneous")
        for i, j, k in itertools.product(basis, repeat=3):
            left: dict[int, Rational] = {}
            for m, c in self.product(i, j).items():
                for n, e in self.product(m, k).items():
                    left[n] = left.get(n, Rational(0)) + c * e
            right: dict[int, Rational] = {}
            for m, c in self.product(j, k).items():
                for n, e in self.product(i, m).items():
                    right[n] = right.get(n, Rational(0)) + c * e
            if {n: v for n, v in left.items() if v} != {n: v for n, v in right.items() if v}:
                failures.append(
                    f"associativity fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                )
        return failures


def truncated_polynomial_algebra(n: int, degree: int = 2) -> GradedAlgebra:
    """K[y_1..y_n]/(y_i^2), each y_i in the given degree"""
    if n < 0:
        raise ValueError("number of variables must be nonnegative")
    subsets = [
        frozenset(combo)
        for size in range(n + 1)
        for combo in itertools.combinations(range(n), size)
    ]
    index = {subset: k for k, subset in enumerate(subsets)}
    mult: StructureConstants = {}
    for i, left in enumerate(subsets):
        for j, right in enumerate(subsets):
            if not left & right:
                mult[(i, j)] = {index[left | right]: Rational(1)}
    labels = tuple(
        "*".join(f"y{v + 1}" for v in sorted(subset)) if subset else "1" for subset in subsets
    )
    return GradedAlgebra(labels, tuple(degree * len(s) for s in subsets), mult)


@dataclass(frozen=True, eq=False)
class GradedModule:
    """Left module with a homogeneous basis and explicit action matrices"""

    algebra: GradedAlgebra
    degrees: tuple[int, ...]
    actions: tuple[Matrix, ...]
    labels: tuple[str, ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def act(self, element: Matrix) -> Matrix:
        """Action matrix of an algebra element given by its coordinate column"""
        total = zeros(self.dim, self.dim)
        for k in range(self.algebra.dim):
            if element[k] != 0:
                total += element[k] * self.actions[k]
        return total

    def indices_in_degree(self, degree: int) -> list[int]:
        return [k for k, d in enumerate(self.degrees) if d == degree]

    def graded_dimension(self) -> dict[int, int]:
        found: dict[int, int] = {}
        for d in self.degrees:
            found[d] = found.get(d, 0) + 1
        return dict(sorted(found.items()))

    def check_axioms(self) -> list[str]:
        failures = []
        algebra = self.algebra
        if self.actions[algebra.unit] != Matrix.eye(self.dim):
            failures.append("unit does not act as the identity")
        for i, j in itertools.product(range(algebra.dim), repeat=2):
            composite = self.actions[i] * self.actions[j]
            expected = zeros(self.dim, self.dim)
            for k, c in algebra.product(i, j).items():
                expected += c * self.actions[k]
            if composite != expected:
                failures.append(f"action of {algebra.labels[i]}*{algebra.labels[j]} mismatched")
        for k, matrix in enumerate(self.actions):
            for row, col in itertools.product(range(self.dim), repeat=2):
                if matrix[row, col] != 0 and (
                    self.degrees[row] != self.degrees[col] + algebra.degrees[k]
                ):
                    failures.append(f"{algebra.labels[k]} does not act homogeneously")
                    break
        return failures

    def quotient(self, vectors: Sequence[Matrix]) -> "GradedModule":
        """M / (submodule generated by the given homogeneous vectors)"""
        spanning = [self.actions[k] * v for v in vectors for k in range(self.algebra.dim)]
        sub = _column_span(spanning, self.dim)
        chosen: list[int] = []
        current = sub
        for k in range(self.dim):
            candidate = current.row_join(_unit(self.dim, k))
            if candidate.rank() > current.shape[1]:
                chosen.append(k)
                current = candidate
        if chosen:
            inverse = current.inv()
            offset = current.shape[1] - len(chosen)
            lifts = Matrix.hstack(*[_unit(self.dim, k) for k in chosen])
            actions = [(inverse * matrix * lifts)[offset:, :] for matrix in self.actions]
        else:
            actions = [zeros(0, 0) for _ in self.actions]
        logger.debug("quotient of a %d-dimensional module has dimension %d", self.dim, len(chosen))
        return GradedModule(
            self.algebra,
            tuple(self.degrees[k] for k in chosen),
            tuple(actions),
            tuple(self.labels[k] for k in chosen) if self.labels else (),
        )


def _unit(size: int, k: int) -> Matrix:
    column = zeros(size, 1)
    column[k] = 1
    return column


def _column_span(columns: Sequence[Matrix], size: int) -> Matrix:
    """Independent columns spanning the same space (a size x 0 matrix when empty)"""
    kept = zeros(size, 0)
    for column in columns:
        candidate = kept.row_join(column)
        if candidate.rank() > kept.shape[1]:
            kept = candidate
    return kept


def free_module(algebra: GradedAlgebra, generator_degrees: Sequence[int]) -> GradedModule:
    """
    A^r with generators in the given internal degrees; basis (g, b) is the
    algebra basis vector b times generator g, in position g * dim A + b
    """
    size = algebra.dim
    rank = len(generator_degrees)
    degrees = tuple(
        generator_degrees[g] + algebra.degrees[b] for g in range(rank) for b in range(size)
    )
    actions = []
    for k in range(size):
        matrix = zeros(rank * size, rank * size)
        for g in range(rank):
            for b in range(size):
                for c, value in algebra.product(k, b).items():
                    matrix[g * size + c, g * size + b] = value
        actions.append(matrix)
    labels = tuple(
        f"{algebra.labels[b]}.g{g}" for g in range(rank) for b in range(size)
    )
    return GradedModule(algebra, degrees, tuple(actions), labels)


def regular_module(algebra: GradedAlgebra) -> GradedModule:
    return free_module(algebra, [0])


def quotient_module(
    algebra: GradedAlgebra, relations: Sequence[Mapping[str, int]]
) -> GradedModule:
    """A / (relations) A for homogeneous relations written by basis label"""
    regular = regular_module(algebra)
    return regular.quotient([algebra.element(relation) for relation in relations])


def residue_field(algebra: GradedAlgebra) -> GradedModule:
    """A / radical, concentrated in degree 0"""
    regular = regular_module(algebra)
    return regular.quotient([_unit(algebra.dim, k) for k in algebra.radical()])
