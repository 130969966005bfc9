"""
Cartan Data - Root and weight combinatorics for finite-type simple algebras

Conventions:
- weights are integer vectors in fundamental-weight coordinates
- cartan[i][j] = alpha_j^vee(alpha_i), so row i is alpha_i in weight coordinates
- symmetrizers d_i = <alpha_i, alpha_i>/2 with the shortest root of length sqrt 2
- <alpha_i, lambda> = d_i * lambda^i
"""

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import lcm

from sympy import Matrix

from ..domain.models import LieType, Weight

logger = logging.getLogger(__name__)


# === Cartan matrices ===


def _kac_matrix(lie_type: LieType) -> list[list[int]]:
    """a[i][j] = alpha_i^vee(alpha_j), Bourbaki numbering (0-based here)"""
    n = lie_type.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i: int, j: int, a_ij: int = -1, a_ji: int = -1) -> None:
        a[i][j] = a_ij
        a[j][i] = a_ji

    match lie_type.series:
        case "A":
            for i in range(n - 1):
                join(i, i + 1)
        case "B":
            for i in range(n - 2):
                join(i, i + 1)
            join(n - 2, n - 1, a_ij=-1, a_ji=-2)
        case "C":
            for i in range(n - 2):
                join(i, i + 1)
            join(n - 2, n - 1, a_ij=-2, a_ji=-1)
        case "D":
            for i in range(n - 2):
                join(i, i + 1)
            join(n - 3, n - 1)
        case "E":
            for i, j in ((0, 2), (2, 3), (3, 4), (1, 3), (4, 5), (5, 6), (6, 7)):
                if j < n:
                    join(i, j)
        case "F":
            join(0, 1)
            join(1, 2, a_ij=-1, a_ji=-2)
            join(2, 3)
        case "G":
            join(0, 1, a_ij=-3, a_ji=-1)
    return a


def _symmetrizers(kac: list[list[int]]) -> tuple[int, ...]:
    """Smallest positive integers with d_i a_ij = d_j a_ji"""
    n = len(kac)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and kac[i][j] and d[j] is None:
                d[j] = d[i] * kac[i][j] / kac[j][i]  # type: ignore[operator]
                queue.append(j)
    values = [v for v in d if v is not None]
    scale = lcm(*(v.denominator for v in values))
    scaled = [int(v * scale) for v in values]
    smallest = min(scaled)
    return tuple(v // smallest for v in scaled)


def _inverse(matrix: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    inverse = Matrix(matrix).inv()
    return tuple(
        tuple(Fraction(int(v.p), int(v.q)) for v in inverse.row(i)) for i in range(inverse.rows)
    )


def _determinant(matrix: Sequence[Sequence[int]]) -> int:
    return int(Matrix(matrix).det())


# === Cartan data ===


@dataclass(frozen=True)
class CartanData:
    """Everything derived from one Cartan matrix"""

    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    det: int
    inverse_cartan: tuple[tuple[Fraction, ...], ...]
    rho: Weight
    longest_word: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def name(self) -> str:
        return self.lie_type.name

    # === Coordinates ===

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental-weight coordinates"""
        return self.cartan[i]

    def root_coords(self, weight: Sequence[int]) -> tuple[Fraction, ...]:
        """Coefficients of weight in the simple-root basis"""
        n = self.rank
        return tuple(
            sum((weight[k] * self.inverse_cartan[k][j] for k in range(n)), Fraction(0))
            for j in range(n)
        )

    def from_root_coords(self, coords: Sequence[int]) -> Weight:
        n = self.rank
        return tuple(sum(coords[k] * self.cartan[k][j] for k in range(n)) for j in range(n))

    def height(self, weight: Sequence[int]) -> Fraction:
        """Sum of root coordinates"""
        return sum(self.root_coords(weight), Fraction(0))

    def pairing(self, left: Sequence[int], right: Sequence[int]) -> Fraction:
        """Symmetrized form, shortest root squared length 2"""
        coords = self.root_coords(left)
        return sum(
            (coords[i] * self.symmetrizers[i] * right[i] for i in range(self.rank)), Fraction(0)
        )

    def rho_check(self, weight: Sequence[int]) -> Fraction:
        """rho^vee(lambda): sum of the root coordinates of lambda"""
        return self.height(weight)

    def two_rho_check(self, weight: Sequence[int]) -> int:
        value = 2 * self.rho_check(weight)
        if value.denominator != 1:
            raise ValueError(f"2 rho^vee({tuple(weight)}) = {value} is not an integer")
        return value.numerator

    def two_rho_pairing(self, weight: Sequence[int]) -> int:
        """<2 rho, lambda> = sum_i 2 d_i a_i where a = root coordinates of lambda"""
        value = 2 * self.pairing(weight, self.rho)
        if value.denominator != 1:
            raise ValueError(f"2<{tuple(weight)}, rho> = {value} is not an integer")
        return value.numerator

    # === Weyl group ===

    def reflect(self, i: int, weight: Sequence[int]) -> Weight:
        """s_i(lambda) = lambda - lambda^i alpha_i"""
        coefficient = weight[i]
        root = self.cartan[i]
        return tuple(weight[j] - coefficient * root[j] for j in range(self.rank))

    def apply_word(self, word: Iterable[int], weight: Sequence[int]) -> Weight:
        """Apply s_{i_1} first, then s_{i_2}, ..."""
        current = tuple(weight)
        for i in word:
            current = self.reflect(i, current)
        return current

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(c >= 0 for c in weight)

    def dominant_conjugate(self, weight: Sequence[int]) -> Weight:
        current = tuple(weight)
        while True:
            negative = next((i for i, c in enumerate(current) if c < 0), None)
            if negative is None:
                return current
            current = self.reflect(negative, current)

    def dual_weight(self, weight: Sequence[int]) -> Weight:
        """lambda* = -w0(lambda)"""
        return tuple(-c for c in self.apply_word(self.longest_word, weight))

    def is_reduced_longest_word(self, word: Sequence[int]) -> bool:
        """True when word has the right length and sends rho to -rho"""
        if len(word) != len(self.positive_roots):
            return False
        return self.apply_word(word, self.rho) == tuple(-c for c in self.rho)

    # === Weights of irreducibles ===

    def dominates(self, upper: Sequence[int], lower: Sequence[int]) -> bool:
        """upper - lower is a nonnegative integer combination of simple roots"""
        coords = self.root_coords([u - v for u, v in zip(upper, lower, strict=True)])
        return all(c.denominator == 1 and c >= 0 for c in coords)

    def weight_system(self, highest: Sequence[int]) -> list[Weight]:
        """Weights of V_lambda, ordered by depth below lambda then lexicographically"""
        if not self.is_dominant(highest):
            raise ValueError(f"highest weight {tuple(highest)} is not dominant")
        top = tuple(highest)
        seen = {top}
        queue = deque([top])
        while queue:
            weight = queue.popleft()
            for i in range(self.rank):
                lower = tuple(w - a for w, a in zip(weight, self.cartan[i], strict=True))
                if lower not in seen and self.dominates(top, self.dominant_conjugate(lower)):
                    seen.add(lower)
                    queue.append(lower)
        return sorted(seen, key=lambda w: (self.height(top) - self.height(w), [-c for c in w]))

    def is_minuscule(self, highest: Sequence[int]) -> bool:
        """Every weight of V_lambda is Weyl-conjugate to lambda"""
        top = tuple(highest)
        return all(self.dominant_conjugate(w) == top for w in self.weight_system(top))

    def weyl_dimension(self, highest: Sequence[int]) -> int:
        shifted = [c + 1 for c in highest]
        value = Fraction(1)
        for root in self.positive_roots:
            root_weight = self.from_root_coords(root)
            value *= self.pairing(root_weight, shifted) / self.pairing(root_weight, self.rho)
        if value.denominator != 1:
            raise ValueError(f"Weyl dimension of {tuple(highest)} came out as {value}")
        return value.numerator


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Positive roots in root coordinates, by height, via alpha-strings"""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    ordered = list(simple)
    layer = list(simple)
    while layer:
        next_layer: list[tuple[int, ...]] = []
        for root in layer:
            weight = [sum(root[k] * cartan[k][j] for k in range(n)) for j in range(n)]
            for i in range(n):
                down = 0
                below = list(root)
                while True:
                    below[i] -= 1
                    if tuple(below) not in found:
                        break
                    down += 1
                if down - weight[i] <= 0:
                    continue
                up = tuple(c + int(k == i) for k, c in enumerate(root))
                if up not in found:
                    found.add(up)
                    ordered.append(up)
                    next_layer.append(up)
        layer = next_layer
    return tuple(ordered)


def _greedy_longest_word(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Smallest-index descent from rho until antidominant"""
    n = len(cartan)
    current = [1] * n
    word: list[int] = []
    while True:
        i = next((k for k, c in enumerate(current) if c > 0), None)
        if i is None:
            return tuple(word)
        coefficient = current[i]
        current = [current[j] - coefficient * cartan[i][j] for j in range(n)]
        word.append(i)


@cache
def cartan_data(lie_type: LieType) -> CartanData:
    """Build (once per process) the Cartan data of a Lie type"""
    kac = _kac_matrix(lie_type)
    n = lie_type.rank
    cartan = tuple(tuple(kac[j][i] for j in range(n)) for i in range(n))
    roots = _positive_roots(cartan)
    word = _greedy_longest_word(cartan)
    data = CartanData(
        lie_type=lie_type,
        cartan=cartan,
        symmetrizers=_symmetrizers(kac),
        det=_determinant(cartan),
        inverse_cartan=_inverse(cartan),
        rho=tuple([1] * n),
        longest_word=word,
        positive_roots=roots,
    )
    if len(word) != len(roots):
        raise ValueError(f"{lie_type.name}: longest word length {len(word)} != {len(roots)} roots")
    logger.debug("built Cartan data for %s: %d positive roots", lie_type.name, len(roots))
    return data


def parse_algebra(text: str) -> CartanData:
    return cartan_data(LieType.parse(text))
