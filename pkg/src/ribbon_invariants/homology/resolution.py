"""
Resolutions - Minimal graded free resolutions and bigraded Tor

Over a graded local algebra the projective cover of a module is the free
module on a homogeneous basis of M / rad M, so each step picks generators
degree by degree, maps a free module onto them and continues with the
kernel.
"""

import logging
from dataclasses import dataclass, field
from typing import Any

from sympy import Matrix, zeros

from .graded import GradedModule, free_module

logger = logging.getLogger(__name__)

# internal degree -> independent homogeneous vectors of that degree
GradedSubspace = dict[int, list[Matrix]]


@dataclass(frozen=True, eq=False)
class ResolutionStep:
    """P_i with its map to P_(i-1) (to M when i = 0)"""

    generator_degrees: tuple[int, ...]
    module: GradedModule
    differential: Matrix

    @property
    def rank(self) -> int:
        return len(self.generator_degrees)

    @property
    def shifts(self) -> tuple[int, ...]:
        """Generators in degree d appear as the shift A(-d)"""
        return tuple(-d for d in self.generator_degrees)


@dataclass(frozen=True, eq=False)
class Resolution:
    module: GradedModule
    steps: tuple[ResolutionStep, ...]
    complete: bool

    @property
    def ranks(self) -> list[int]:
        return [step.rank for step in self.steps]

    def compositions_vanish(self) -> bool:
        """d_(i) d_(i+1) = 0 for every consecutive pair, augmentation included"""
        return all(
            (lower.differential * upper.differential).is_zero_matrix
            for lower, upper in zip(self.steps, self.steps[1:], strict=False)
        )

    def is_minimal(self) -> bool:
        """No differential past the augmentation has a unit entry"""
        algebra = self.module.algebra
        for lower, upper in zip(self.steps, self.steps[1:], strict=False):
            for k in range(upper.rank):
                column = upper.differential[:, k * algebra.dim + algebra.unit]
                for j in range(lower.rank):
                    if column[j * algebra.dim + algebra.unit] != 0:
                        return False
        return True


def _span(vectors: list[Matrix], size: int) -> Matrix:
    matrix = zeros(size, 0)
    for vector in vectors:
        candidate = matrix.row_join(vector)
        if candidate.rank() > matrix.shape[1]:
            matrix = candidate
    return matrix


def _minimal_generators(
    ambient: GradedModule, kernel: GradedSubspace
) -> list[tuple[int, Matrix]]:
    """Homogeneous vectors of the kernel that are independent modulo rad * kernel"""
    algebra = ambient.algebra
    chosen: list[tuple[int, Matrix]] = []
    for degree in sorted(kernel):
        radical_part = [
            ambient.actions[y] * vector
            for y in algebra.radical()
            for vector in kernel.get(degree - algebra.degrees[y], [])
        ]
        span = _span(radical_part, ambient.dim)
        for vector in kernel[degree]:
            candidate = span.row_join(vector)
            if candidate.rank() > span.shape[1]:
                span = candidate
                chosen.append((degree, vector))
    return chosen


def _kernel(cover: GradedModule, differential: Matrix) -> GradedSubspace:
    kernel: GradedSubspace = {}
    for degree in sorted(set(cover.degrees)):
        indices = cover.indices_in_degree(degree)
        block = differential[:, indices]
        for solution in block.nullspace():
            vector = zeros(cover.dim, 1)
            for position, index in enumerate(indices):
                vector[index] = solution[position]
            kernel.setdefault(degree, []).append(vector)
    return kernel


def minimal_resolution(module: GradedModule, steps: int) -> Resolution:
    """P_0, ..., P_steps of a minimal free resolution, stopping early if it ends"""
    algebra = module.algebra
    if not algebra.is_local():
        raise ValueError("minimal resolutions need a graded local algebra")
    ambient = module
    kernel: GradedSubspace = {}
    for index, degree in enumerate(module.degrees):
        vector = zeros(module.dim, 1)
        vector[index] = 1
        kernel.setdefault(degree, []).append(vector)
    built: list[ResolutionStep] = []
    complete = False
    for step in range(steps + 1):
        generators = _minimal_generators(ambient, kernel)
        if not generators:
            complete = True
            break
        degrees = tuple(degree for degree, _ in generators)
        cover = free_module(algebra, degrees)
        columns = [
            ambient.actions[b] * vector for _, vector in generators for b in range(algebra.dim)
        ]
        differential = Matrix.hstack(*columns)
        built.append(ResolutionStep(degrees, cover, differential))
        logger.debug("resolution step %d: generators in degrees %s", step, degrees)
        kernel = _kernel(cover, differential)
        ambient = cover
    else:
        complete = not kernel
    return Resolution(module, tuple(built), complete)


# === Tor ===


@dataclass(frozen=True)
class TorTable:
    """dim Tor^i in internal degree j, known for i <= i_max"""

    i_max: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def degree(self, i: int) -> dict[int, int]:
        if i > self.i_max:
            raise ValueError(f"Tor^{i} is beyond the computed range {self.i_max}")
        return {j: dim for (k, j), dim in sorted(self.entries.items()) if k == i}

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, _ = key
        if i > self.i_max:
            raise ValueError(f"Tor^{i} is beyond the computed range {self.i_max}")
        return self.entries.get(key, 0)

    def to_json(self) -> dict[str, Any]:
        return {
            "i_max": self.i_max,
            "entries": [[i, j, dim] for (i, j), dim in sorted(self.entries.items())],
        }


def _tensor_differential(
    lower: ResolutionStep, upper: ResolutionStep, other: GradedModule
) -> Matrix:
    """(d (x) 1): P_upper (x)_A N -> P_lower (x)_A N"""
    algebra = other.algebra
    n = other.dim
    matrix = zeros(lower.rank * n, upper.rank * n)
    for k in range(upper.rank):
        image = upper.differential[:, k * algebra.dim + algebra.unit]
        for j in range(lower.rank):
            action = zeros(n, n)
            for c in range(algebra.dim):
                coefficient = image[j * algebra.dim + c]
                if coefficient != 0:
                    action += coefficient * other.actions[c]
            matrix[j * n : (j + 1) * n, k * n : (k + 1) * n] = action
    return matrix


def _chain_degrees(step: ResolutionStep, other: GradedModule) -> list[int]:
    return [g + d for g in step.generator_degrees for d in other.degrees]


def _rank_by_degree(matrix: Matrix | None, degrees: list[int]) -> dict[int, int]:
    """Rank of the columns of each internal degree"""
    if matrix is None:
        return {}
    found: dict[int, int] = {}
    for degree in set(degrees):
        columns = [k for k, d in enumerate(degrees) if d == degree]
        found[degree] = matrix[:, columns].rank() if matrix.shape[0] else 0
    return found


def tor_bigraded(module: GradedModule, other: GradedModule, i_max: int) -> TorTable:
    """Tor^A_i(module, other) in every internal degree for i <= i_max"""
    resolution = minimal_resolution(module, i_max + 1)
    steps = resolution.steps
    entries: dict[tuple[int, int], int] = {}
    for i in range(min(i_max + 1, len(steps))):
        degrees = _chain_degrees(steps[i], other)
        outgoing = _tensor_differential(steps[i - 1], steps[i], other) if i > 0 else None
        incoming = (
            _tensor_differential(steps[i], steps[i + 1], other) if i + 1 < len(steps) else None
        )
        out_rank = _rank_by_degree(outgoing, degrees)
        in_rank = (
            _rank_by_degree(incoming, _chain_degrees(steps[i + 1], other))
            if incoming is not None
            else {}
        )
        for degree in sorted(set(degrees)):
            size = degrees.count(degree)
            dim = size - out_rank.get(degree, 0) - in_rank.get(degree, 0)
            if dim:
                entries[(i, degree)] = dim
    logger.debug("Tor table through degree %d: %s", i_max, entries)
    return TorTable(i_max, entries)
