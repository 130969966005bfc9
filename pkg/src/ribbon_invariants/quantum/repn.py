"""
Representations - Irreducible U_q(g)-modules as exact weight-graded matrices

V_lambda is built weight by weight below the highest weight vector. At each
weight the spanning vectors are divided powers F_i^(n) b of basis vectors b
higher up; their images under all E_j are computed from the commutation
rule, and a vector is kept only when its E-image is independent of the ones
already kept. A vector with zero E-image below the top lies in the radical
of the contravariant form, so this is the quotient by that radical.

Every entry of E_i, F_i and F_i^(n) must land in Z[q^(1/D), q^(-1/D)].
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from ..domain.models import Weight, format_weight
from ..errors import InternalCheckError
from ..exactalg import (
    ONE,
    ZERO,
    LaurentPoly,
    SparseMatrix,
    Vector,
    add_scaled,
    q_power,
    quantum_factorial,
    quantum_integer,
)
from ..exactalg.linalg import LeftInverse, determinant, left_inverse, solve
from .cache import KeyedCache
from .cartan import CartanData

logger = logging.getLogger(__name__)


class ModuleKey(NamedTuple):
    """Identifies V_lambda (dual=False) or its literal dual (dual=True)"""

    algebra: str
    highest: Weight
    dual: bool = False

    def __str__(self) -> str:
        return f"{self.algebra}[{format_weight(self.highest)}]{'*' if self.dual else ''}"


class WeightModule:
    """Finite-dimensional weight module with explicit generator matrices"""

    def __init__(
        self,
        cd: CartanData,
        key: ModuleKey,
        top_weight: Weight,
        weights: Sequence[Weight],
        e_ops: Sequence[SparseMatrix],
        f_ops: Sequence[SparseMatrix],
        f_divided: Mapping[tuple[int, int], SparseMatrix] | None = None,
    ):
        self.cd = cd
        self.key = key
        self.top_weight = top_weight
        self.weights = tuple(weights)
        grouped: dict[Weight, list[int]] = {}
        for index, weight in enumerate(self.weights):
            grouped.setdefault(weight, []).append(index)
        self.by_weight = {weight: tuple(indices) for weight, indices in grouped.items()}
        self.e_ops = tuple(e_ops)
        self.f_ops = tuple(f_ops)
        self._divided: dict[tuple[str, int, int], SparseMatrix] = {}
        for (i, n), matrix in (f_divided or {}).items():
            self._divided[("F", i, n)] = matrix
        self._lifts: dict[Weight, LeftInverse] = {
            weight: self._build_lift(weight) for weight in self.by_weight if weight != top_weight
        }

    @property
    def dim(self) -> int:
        return len(self.weights)

    def basis(self) -> range:
        return range(len(self.weights))

    def e(self, i: int) -> SparseMatrix:
        return self.e_ops[i]

    def f(self, i: int) -> SparseMatrix:
        return self.f_ops[i]

    def k_exponent(self, i: int, index: int) -> int:
        """K~_i acts on basis vector index by q^(d_i * wt^i)"""
        return self.cd.symmetrizers[i] * self.weights[index][i]

    def e_divided(self, i: int, n: int) -> SparseMatrix:
        return self._divided_power("E", i, n)

    def f_divided(self, i: int, n: int) -> SparseMatrix:
        return self._divided_power("F", i, n)

    def _divided_power(self, kind: str, i: int, n: int) -> SparseMatrix:
        if n < 0:
            raise ValueError(f"negative divided power {n}")
        if n == 0:
            return SparseMatrix.identity(self.basis())
        generator = self.e_ops[i] if kind == "E" else self.f_ops[i]
        if n == 1:
            return generator
        cached = self._divided.get((kind, i, n))
        if cached is None:
            power = generator
            for _ in range(n - 1):
                power = generator @ power
            cached = power.exact_div(quantum_factorial(n, self.cd.symmetrizers[i]))
            self._divided[(kind, i, n)] = cached
        return cached

    # === Lifting through the E-action ===

    def e_image(self, index: int) -> Vector:
        """Stacked E-image of a basis vector, keyed by (i, row)"""
        return {
            (i, row): value
            for i, op in enumerate(self.e_ops)
            for row, value in op.column(index).items()
        }

    def _build_lift(self, weight: Weight) -> LeftInverse:
        columns = [self.e_image(index) for index in self.by_weight[weight]]
        if any(not column for column in columns):
            raise InternalCheckError(f"{self.key}: E-action is not injective at weight {weight}")
        return left_inverse(columns)

    def lift(self, weight: Weight, images: Mapping[tuple[int, int], LaurentPoly]) -> Vector:
        """
        The unique vector y of the given weight (below the top) whose E_i y
        components are images[(i, row)]
        """
        coords = self._lifts[weight].apply(images)
        return {
            index: value
            for index, value in zip(self.by_weight[weight], coords, strict=True)
            if value
        }

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.key}, dim={self.dim})"


class Repn(WeightModule):
    """V_lambda with its construction history"""

    def __init__(
        self,
        cd: CartanData,
        highest_weight: Weight,
        weights: Sequence[Weight],
        origins: Sequence[tuple[int, int, int] | None],
        e_ops: Sequence[SparseMatrix],
        f_ops: Sequence[SparseMatrix],
        f_divided: Mapping[tuple[int, int], SparseMatrix],
    ):
        key = ModuleKey(cd.name, highest_weight)
        super().__init__(cd, key, highest_weight, weights, e_ops, f_ops, f_divided)
        self.highest_weight = highest_weight
        self.origins = tuple(origins)

    @property
    def v_h(self) -> int:
        return 0

    @property
    def lowest_weight(self) -> Weight:
        return self.cd.apply_word(self.cd.longest_word, self.highest_weight)

    @property
    def v_l(self) -> int:
        (index,) = self.by_weight[self.lowest_weight]
        return index

    @property
    def weight_spaces(self) -> dict[Weight, int]:
        return {weight: len(indices) for weight, indices in self.by_weight.items()}


# === Construction ===


def _shift(weight: Weight, root: Weight, times: int) -> Weight:
    return tuple(w + times * a for w, a in zip(weight, root, strict=True))


def _construct(cd: CartanData, highest: Weight) -> Repn:
    order = cd.weight_system(highest)
    present = set(order)
    rank = cd.rank
    weights: list[Weight] = [highest]
    origins: list[tuple[int, int, int] | None] = [None]
    by_weight: dict[Weight, list[int]] = {highest: [0]}
    e_cols: list[dict[int, Vector]] = [{} for _ in range(rank)]
    f_cols: dict[tuple[int, int], dict[int, Vector]] = {}

    def candidate_image(i: int, n: int, source: int) -> Vector:
        image: Vector = {}
        divided = f_cols.get((i, n), {})
        for j in range(rank):
            for row, value in e_cols[j].get(source, {}).items():
                pushed = divided.get(row)
                if pushed:
                    add_scaled(image, {(j, r): v for r, v in pushed.items()}, value)
            if j != i:
                continue
            factor = quantum_integer(weights[source][i] - n + 1, cd.symmetrizers[i])
            if not factor:
                continue
            lower = {source: ONE} if n == 1 else f_cols.get((i, n - 1), {}).get(source, {})
            add_scaled(image, {(i, r): v for r, v in lower.items()}, factor)
        return image

    for weight in order[1:]:
        candidates: list[tuple[int, int, int]] = []
        for i in range(rank):
            n = 1
            while (source_weight := _shift(weight, cd.simple_root(i), n)) in present:
                candidates.extend((n, i, source) for source in by_weight.get(source_weight, ()))
                n += 1
        # longest divided power first keeps every F^(n) image integral on the basis
        candidates.sort(key=lambda c: (-c[0], c[1], c[2]))

        members: list[int] = []
        images: list[Vector] = []
        for n, i, source in candidates:
            image = candidate_image(i, n, source)
            coords: Vector
            if not image:
                coords = {}
            else:
                solution = solve(images, image) if images else None
                if solution is None:
                    index = len(weights)
                    weights.append(weight)
                    origins.append((i, n, source))
                    members.append(index)
                    images.append(image)
                    for (j, row), value in image.items():
                        e_cols[j].setdefault(index, {})[row] = value
                    coords = {index: ONE}
                else:
                    coords = {
                        members[k]: x.to_laurent() for k, x in enumerate(solution) if x
                    }
            if coords:
                f_cols.setdefault((i, n), {})[source] = coords
        if not members:
            raise InternalCheckError(f"weight {weight} of V{highest} received no basis vector")
        by_weight[weight] = members

    repn = Repn(
        cd,
        highest,
        weights,
        origins,
        [SparseMatrix(columns) for columns in e_cols],
        [SparseMatrix(f_cols.get((i, 1), {})) for i in range(rank)],
        {key: SparseMatrix(columns) for key, columns in f_cols.items() if key[1] > 1},
    )
    expected = cd.weyl_dimension(highest)
    if repn.dim != expected:
        raise InternalCheckError(
            f"V{highest} has dimension {repn.dim}, Weyl formula gives {expected}"
        )
    logger.debug("built V%s over %s: dim %d", highest, cd.name, repn.dim)
    return repn


_REPNS: KeyedCache[tuple[str, Weight], Repn] = KeyedCache("repn")


def build_irrep(cd: CartanData, highest_weight: Sequence[int]) -> Repn:
    """V_lambda for dominant lambda, memoized per (algebra, lambda)"""
    highest = tuple(highest_weight)
    if len(highest) != cd.rank:
        raise ValueError(
            f"weight {highest} has length {len(highest)}, {cd.name} has rank {cd.rank}"
        )
    if not cd.is_dominant(highest):
        raise ValueError(f"highest weight {highest} is not dominant")
    return _REPNS.get_or_build((cd.name, highest), lambda: _construct(cd, highest))


# === Distinguished vectors and invariants ===


def extremal_vector(rep: Repn, word: Sequence[int] | None = None) -> Vector:
    """
    F_{i_1}^(lambda^{i_1}), then F_{i_2}^((s_{i_1} lambda)^{i_2}), ... applied to v_h
    """
    cd = rep.cd
    chosen = tuple(cd.longest_word if word is None else word)
    if not cd.is_reduced_longest_word(chosen):
        raise ValueError(f"{chosen} is not a reduced word for the longest element of {cd.name}")
    vector: Vector = {rep.v_h: ONE}
    current = rep.highest_weight
    for i in chosen:
        exponent = current[i]
        if exponent:
            vector = rep.f_divided(i, exponent).apply(vector)
        current = cd.reflect(i, current)
    if not vector:
        raise InternalCheckError(f"extremal vector of V{rep.highest_weight} vanished")
    return vector


def quantum_character(module: WeightModule) -> LaurentPoly:
    """sum over weights of mult * q^<2 rho, mu>"""
    total = ZERO
    for weight in module.weights:
        total = total + q_power(module.cd.two_rho_pairing(weight))
    return total


def contravariant_form(rep: Repn) -> dict[Weight, list[list[LaurentPoly]]]:
    """
    Gram matrices per weight space of the form with <v_h, v_h> = 1 and
    <F_i^(n) x, y> = <x, E_i^(n) y>
    """
    gram: dict[int, dict[int, LaurentPoly]] = {rep.v_h: {rep.v_h: ONE}}
    for index in range(1, rep.dim):
        origin = rep.origins[index]
        assert origin is not None
        i, n, parent = origin
        row: dict[int, LaurentPoly] = {}
        for other in rep.by_weight[rep.weights[index]]:
            raised = rep.e_divided(i, n).column(other)
            value = ZERO
            for target, coefficient in raised.items():
                entry = gram[parent].get(target)
                if entry:
                    value = value + coefficient * entry
            row[other] = value
        gram[index] = row
    return {
        weight: [[gram[a].get(b, ZERO) for b in indices] for a in indices]
        for weight, indices in rep.by_weight.items()
    }


def check_nondegenerate(rep: Repn) -> list[str]:
    failures = []
    for weight, block in contravariant_form(rep).items():
        if determinant(block).is_zero():
            failures.append(f"contravariant form degenerate at weight {weight}")
    return failures


def check_relations(module: WeightModule) -> list[str]:
    """Names of the failed defining relations of U_q(g) (empty when all hold)"""
    cd = module.cd
    failures: list[str] = []
    for i in range(cd.rank):
        root = cd.simple_root(i)
        for name, op, sign in (("E", module.e(i), 1), ("F", module.f(i), -1)):
            for row, column, _ in op.entries():
                if module.weights[row] != _shift(module.weights[column], root, sign):
                    failures.append(f"weight shift of {name}{i + 1}")
                    break
    identity_keys = list(module.basis())
    for i in range(cd.rank):
        for j in range(cd.rank):
            commutator = module.e(i) @ module.f(j) - module.f(j) @ module.e(i)
            expected = SparseMatrix()
            if i == j:
                expected = SparseMatrix.diagonal(
                    {
                        k: quantum_integer(module.weights[k][i], cd.symmetrizers[i])
                        for k in identity_keys
                    }
                )
            if commutator != expected:
                failures.append(f"commutator E{i + 1}F{j + 1}")
    for i in range(cd.rank):
        for j in range(cd.rank):
            if i == j:
                continue
            order = 1 - cd.cartan[j][i]
            for name, divided, single in (
                ("E", module.e_divided, module.e(j)),
                ("F", module.f_divided, module.f(j)),
            ):
                total = SparseMatrix()
                for a in range(order + 1):
                    term = divided(i, a) @ single @ divided(i, order - a)
                    total = total + (term if a % 2 == 0 else -term)
                if not total.is_zero():
                    failures.append(f"serre {name}{i + 1}{name}{j + 1}")
    return failures


# === Duals ===


def dual_module(rep: Repn) -> WeightModule:
    """
    The literal dual V^* on the dual basis f^a, with (u f)(v) = f(S(u) v),
    S(E_i) = -K~_{-i} E_i and S(F_i) = -F_i K~_i
    """
    cd = rep.cd
    e_ops = []
    f_ops = []
    for i in range(cd.rank):
        e_cols: dict[int, Vector] = {}
        for row, column, value in rep.e(i).entries():
            factor = q_power(-rep.k_exponent(i, row), -1)
            e_cols.setdefault(row, {})[column] = factor * value
        f_cols: dict[int, Vector] = {}
        for row, column, value in rep.f(i).entries():
            factor = q_power(rep.k_exponent(i, column), -1)
            f_cols.setdefault(row, {})[column] = factor * value
        e_ops.append(SparseMatrix(e_cols))
        f_ops.append(SparseMatrix(f_cols))
    weights = [tuple(-c for c in weight) for weight in rep.weights]
    top = tuple(-c for c in rep.lowest_weight)
    key = ModuleKey(cd.name, rep.highest_weight, True)
    return WeightModule(cd, key, top, weights, e_ops, f_ops)


@dataclass(frozen=True, eq=False)
class DualRepn:
    """
    V_lambda^* together with the module isomorphism from V_{lambda*},
    normalized so that <v_h, v_l> = 1
    """

    base: Repn
    module: WeightModule
    target: Repn
    iso_to_Vlambda_star: SparseMatrix
    lowest_vector: Vector
    word: tuple[int, ...]

    def pairing(self, v: int, w: int) -> LaurentPoly:
        """<b_v, b'_w> for b_v in V_lambda and b'_w in V_{lambda*}"""
        return self.iso_to_Vlambda_star.column(w).get(v, ZERO)


def _build_dual(rep: Repn, word: tuple[int, ...]) -> DualRepn:
    cd = rep.cd
    module = dual_module(rep)
    target = build_irrep(cd, cd.dual_weight(rep.highest_weight))
    images: dict[int, Vector] = {target.v_h: {rep.v_l: ONE}}
    for index in range(1, target.dim):
        origin = target.origins[index]
        assert origin is not None
        i, n, parent = origin
        images[index] = module.f_divided(i, n).apply(images[parent])
    iso = SparseMatrix(images)
    lowest = extremal_vector(target, word)
    paired = iso.apply(lowest)
    scale = paired.get(rep.v_h, ZERO)
    if set(paired) != {rep.v_h} or not scale.is_unit():
        raise InternalCheckError(
            f"V{rep.highest_weight}: pairing <v_h, v_l> = {scale} is not a unit"
        )
    iso = iso.scaled(scale.unit_inverse())
    return DualRepn(rep, module, target, iso, lowest, word)


_DUALS: KeyedCache[tuple[str, Weight, tuple[int, ...]], DualRepn] = KeyedCache("dual")


def dual_repn(rep: Repn, word: Sequence[int] | None = None) -> DualRepn:
    chosen = tuple(rep.cd.longest_word if word is None else word)
    return _DUALS.get_or_build(
        (rep.cd.name, rep.highest_weight, chosen), lambda: _build_dual(rep, chosen)
    )


def check_intertwines(
    iso: SparseMatrix, source: WeightModule, target: WeightModule
) -> list[str]:
    """Generators on which iso: source -> target fails to commute with the action"""
    failures = []
    for i in range(source.cd.rank):
        if iso @ source.e(i) != target.e(i) @ iso:
            failures.append(f"E{i + 1}")
        if iso @ source.f(i) != target.f(i) @ iso:
            failures.append(f"F{i + 1}")
    return failures


def strand_module(cd: CartanData, label: Sequence[int], upward: bool) -> WeightModule:
    """V_label for an up strand, its literal dual for a down strand"""
    rep = build_irrep(cd, label)
    return rep if upward else dual_repn(rep).module
