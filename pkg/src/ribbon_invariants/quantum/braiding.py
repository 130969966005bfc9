"""
Braiding - Quasi-R-matrix, weight operator and the braiding on V (x) W

Coproducts (iterated over any number of factors):
    Delta(E_i)  = E_i (x) 1 + K~_i (x) E_i      Delta(F_i)  = F_i (x) K~_{-i} + 1 (x) F_i
    Delta'(E_i) = E_i (x) 1 + K~_{-i} (x) E_i   Delta'(F_i) = F_i (x) K~_i + 1 (x) F_i

Theta lies in U^- (x) U^+: its nu-block lowers the first factor by nu and
raises the second by nu, with Delta(u) Theta = Theta Delta'(u). The braiding
is sigma = flip . A . Theta^-1 with A(v (x) w) = q^<wt v, wt w> v (x) w.
"""

import itertools
import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..domain.models import Weight
from ..errors import InternalCheckError
from ..exactalg import ONE, ZERO, LaurentPoly, SparseMatrix, Vector, add_scaled, q_power
from ..exactalg.linalg import nullspace
from ..exactalg.ratfunc import RatFunc
from .cache import KeyedCache
from .repn import ModuleKey, WeightModule

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


# === Tensor products ===


class TensorSpace:
    """Ordered tensor product of weight modules with product basis keys"""

    def __init__(self, factors: Sequence[WeightModule]):
        if not factors:
            raise ValueError("a tensor space needs at least one factor")
        self.factors = tuple(factors)
        self.cd = factors[0].cd

    @property
    def keys(self) -> tuple[ModuleKey, ...]:
        return tuple(factor.key for factor in self.factors)

    @property
    def dim(self) -> int:
        size = 1
        for factor in self.factors:
            size *= factor.dim
        return size

    def basis(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(factor.basis() for factor in self.factors))

    def weight(self, key: tuple[int, ...]) -> Weight:
        total = [0] * self.cd.rank
        for factor, index in zip(self.factors, key, strict=True):
            for j, c in enumerate(factor.weights[index]):
                total[j] += c
        return tuple(total)

    def e_action(self, i: int, opposite: bool = False) -> SparseMatrix:
        """Delta(E_i), or Delta'(E_i) when opposite"""
        sign = -1 if opposite else 1
        columns: dict[tuple[int, ...], Vector] = {}
        for key in self.basis():
            column: Vector = {}
            exponent = 0
            for k, (factor, index) in enumerate(zip(self.factors, key, strict=True)):
                for row, value in factor.e(i).column(index).items():
                    target = key[:k] + (row,) + key[k + 1 :]
                    add_scaled(column, {target: value}, q_power(sign * exponent))
                exponent += factor.k_exponent(i, index)
            columns[key] = column
        return SparseMatrix(columns)

    def f_action(self, i: int, opposite: bool = False) -> SparseMatrix:
        """Delta(F_i), or Delta'(F_i) when opposite"""
        sign = 1 if opposite else -1
        columns: dict[tuple[int, ...], Vector] = {}
        for key in self.basis():
            column: Vector = {}
            exponent = 0
            for k in reversed(range(len(self.factors))):
                factor = self.factors[k]
                index = key[k]
                for row, value in factor.f(i).column(index).items():
                    target = key[:k] + (row,) + key[k + 1 :]
                    add_scaled(column, {target: value}, q_power(sign * exponent))
                exponent += factor.k_exponent(i, index)
            columns[key] = column
        return SparseMatrix(columns)


# === Quasi-R-matrix ===


def _root_differences(module: WeightModule) -> set[tuple[int, ...]]:
    """Nonzero nonnegative root-coordinate differences between weights"""
    cd = module.cd
    found: set[tuple[int, ...]] = set()
    weights = list(module.by_weight)
    for upper in weights:
        for lower in weights:
            coords = cd.root_coords([u - v for u, v in zip(upper, lower, strict=True)])
            if all(c >= 0 for c in coords) and any(coords):
                found.add(tuple(int(c) for c in coords))
    return found


def _theta_blocks(V: WeightModule, W: WeightModule) -> dict[tuple[int, ...], dict[Pair, Vector]]:
    cd = V.cd
    rank = cd.rank
    zero = tuple([0] * rank)
    candidates = _root_differences(V) & _root_differences(W)
    order = sorted(candidates, key=lambda nu: (sum(nu), nu))
    blocks: dict[tuple[int, ...], dict[Pair, Vector]] = {
        zero: {(a, b): {(a, b): ONE} for a in V.basis() for b in W.basis()}
    }
    v_weights = sorted(V.by_weight, key=lambda w: -cd.height(w))
    for nu in order:
        shift = cd.from_root_coords(nu)
        block: dict[Pair, Vector] = {}
        previous = []
        for i in range(rank):
            lowered = tuple(c - int(k == i) for k, c in enumerate(nu))
            if all(c >= 0 for c in lowered) and lowered in blocks:
                previous.append((i, blocks[lowered]))
        if not previous:
            continue
        for mu in v_weights:
            mu_low = tuple(m - s for m, s in zip(mu, shift, strict=True))
            if mu_low not in V.by_weight:
                continue
            for eta, w_indices in W.by_weight.items():
                eta_up = tuple(e + s for e, s in zip(eta, shift, strict=True))
                if eta_up not in W.by_weight:
                    continue
                for a in V.by_weight[mu]:
                    for b in w_indices:
                        images = _theta_images(V, W, a, b, block, previous, mu)
                        solved = _solve_block(V, mu_low, images)
                        if solved:
                            block[(a, b)] = solved
        if block:
            blocks[nu] = block
    return blocks


def _theta_images(
    V: WeightModule,
    W: WeightModule,
    a: int,
    b: int,
    block: Mapping[Pair, Vector],
    previous: Sequence[tuple[int, Mapping[Pair, Vector]]],
    mu: Weight,
) -> dict[tuple[int, int, int], LaurentPoly]:
    """(E_i (x) 1) y for the unknown y = Theta_nu(a (x) b), keyed by (i, c, d)"""
    images: dict[tuple[int, int, int], LaurentPoly] = {}

    def push(i: int, vector: Mapping[Pair, LaurentPoly], scale: LaurentPoly) -> None:
        add_scaled(images, {(i, c, d): v for (c, d), v in vector.items()}, scale)  # type: ignore[arg-type]

    cd = V.cd
    for i in range(cd.rank):
        for raised, value in V.e(i).column(a).items():
            known = block.get((raised, b))
            if known:
                push(i, known, value)
    for i, lower_block in previous:
        k_inverse = q_power(-cd.symmetrizers[i] * mu[i])
        for raised, value in W.e(i).column(b).items():
            known = lower_block.get((a, raised))
            if known:
                push(i, known, value * k_inverse)
        known = lower_block.get((a, b))
        if not known:
            continue
        for (c, d), value in known.items():
            k_factor = q_power(V.k_exponent(i, c), -1)
            for d_raised, e_value in W.e(i).column(d).items():
                add_scaled(images, {(i, c, d_raised): value * e_value}, k_factor)  # type: ignore[dict-item]
    return images


def _solve_block(
    V: WeightModule,
    mu_low: Weight,
    images: Mapping[tuple[int, int, int], LaurentPoly],
) -> Vector:
    if not images:
        return {}
    by_d: dict[int, dict[tuple[int, int], LaurentPoly]] = {}
    for (i, c, d), value in images.items():
        by_d.setdefault(d, {})[(i, c)] = value
    solved: Vector = {}
    for d, component in by_d.items():
        for c, value in V.lift(mu_low, component).items():
            solved[(c, d)] = value
    return solved


@dataclass(frozen=True, eq=False)
class QuasiRMatrix:
    """Theta on a concrete V (x) W"""

    source: tuple[ModuleKey, ModuleKey]
    matrix: SparseMatrix
    blocks: int


def theta_on(V: WeightModule, W: WeightModule) -> SparseMatrix:
    """Theta on V (x) W as a matrix over basis pairs"""
    return _THETAS.get_or_build((V.key, W.key), lambda: _build_theta(V, W)).matrix


def _build_theta(V: WeightModule, W: WeightModule) -> QuasiRMatrix:
    blocks = _theta_blocks(V, W)
    columns: dict[Pair, Vector] = {}
    for block in blocks.values():
        for pair, vector in block.items():
            add_scaled(columns.setdefault(pair, {}), vector)
    theta = SparseMatrix(columns)
    space = TensorSpace([V, W])
    for i in range(V.cd.rank):
        for name, plain, opposite in (
            ("E", space.e_action(i), space.e_action(i, opposite=True)),
            ("F", space.f_action(i), space.f_action(i, opposite=True)),
        ):
            if plain @ theta != theta @ opposite:
                raise InternalCheckError(
                    f"quasi-R-matrix on {V.key} (x) {W.key} fails the {name}{i + 1} residual"
                )
    logger.debug("built Theta on %s (x) %s with %d weight blocks", V.key, W.key, len(blocks))
    return QuasiRMatrix((V.key, W.key), theta, len(blocks))


def inverse_unipotent(matrix: SparseMatrix, keys: Sequence[Pair]) -> SparseMatrix:
    """(1 + N)^-1 = sum_k (-N)^k for nilpotent N"""
    identity = SparseMatrix.identity(keys)
    step = -(matrix - identity)
    result = identity
    term = identity
    for _ in range(len(keys) + 1):
        term = step @ term
        if term.is_zero():
            return result
        result = result + term
    raise InternalCheckError("Theta - 1 is not nilpotent")


# === Weight operator and braiding ===


def weight_exponent(V: WeightModule, W: WeightModule, a: int, b: int) -> Fraction:
    return V.cd.pairing(V.weights[a], W.weights[b])


def weight_operator(V: WeightModule, W: WeightModule) -> SparseMatrix:
    """A(v (x) w) = q^<wt v, wt w> v (x) w"""
    return SparseMatrix.diagonal(
        {
            (a, b): q_power(weight_exponent(V, W, a, b))
            for a in V.basis()
            for b in W.basis()
        }
    )


BraidKey = tuple[ModuleKey, ModuleKey, bool]


@dataclass(frozen=True, eq=False)
class BraidOp:
    """
    sigma_{left,right}: left (x) right -> right (x) left, or its inverse
    right (x) left -> left (x) right when inverse is set
    """

    left: ModuleKey
    right: ModuleKey
    inverse: bool
    matrix: SparseMatrix

    @property
    def cache_key(self) -> BraidKey:
        return (self.left, self.right, self.inverse)

    @property
    def source(self) -> tuple[ModuleKey, ModuleKey]:
        return (self.right, self.left) if self.inverse else (self.left, self.right)

    @property
    def target(self) -> tuple[ModuleKey, ModuleKey]:
        return (self.left, self.right) if self.inverse else (self.right, self.left)


def _build_braiding(V: WeightModule, W: WeightModule) -> BraidOp:
    keys = [(a, b) for a in V.basis() for b in W.basis()]
    theta_inverse = inverse_unipotent(theta_on(V, W), keys)
    columns: dict[Pair, Vector] = {}
    for pair, column in theta_inverse.columns():
        flipped: Vector = {}
        for (c, d), value in column.items():
            flipped[(d, c)] = value * q_power(weight_exponent(V, W, c, d))
        columns[pair] = flipped  # type: ignore[index]
    return BraidOp(V.key, W.key, False, SparseMatrix(columns))


def _build_braiding_inverse(V: WeightModule, W: WeightModule) -> BraidOp:
    theta = theta_on(V, W)
    columns: dict[Pair, Vector] = {}
    for a in V.basis():
        for b in W.basis():
            scale = q_power(-weight_exponent(V, W, a, b))
            columns[(b, a)] = {key: value * scale for key, value in theta.column((a, b)).items()}
    return BraidOp(V.key, W.key, True, SparseMatrix(columns))


_BRAIDS: KeyedCache[BraidKey, BraidOp] = KeyedCache("braid")
_THETAS: KeyedCache[tuple[ModuleKey, ModuleKey], QuasiRMatrix] = KeyedCache("theta")


def braiding(V: WeightModule, W: WeightModule) -> BraidOp:
    """sigma_{V,W}: V (x) W -> W (x) V"""
    return _BRAIDS.get_or_build((V.key, W.key, False), lambda: _build_braiding(V, W))


def braiding_inverse(V: WeightModule, W: WeightModule) -> BraidOp:
    """sigma_{V,W}^-1: W (x) V -> V (x) W"""
    return _BRAIDS.get_or_build((V.key, W.key, True), lambda: _build_braiding_inverse(V, W))


def seed_braid(op: BraidOp) -> None:
    """Install a block loaded from persistent storage"""
    _BRAIDS.seed(op.cache_key, op)


def cached_braids() -> list[BraidOp]:
    return [op for _, op in _BRAIDS.items()]


# === Placement and checks ===


def act_on_factors(
    matrix: SparseMatrix,
    position: int,
    arity: int,
    vector: Mapping[tuple[int, ...], LaurentPoly],
) -> Vector:
    """
    Apply a block whose columns are arity-tuples and whose rows are tuples
    of any length to factors position .. position + arity - 1 of a tensor
    vector; identities act on the remaining factors
    """
    result: Vector = {}
    end = position + arity
    for key, value in vector.items():
        column = matrix.column(key[position:end])
        for row, entry in column.items():
            add_scaled(result, {key[:position] + row + key[end:]: entry}, value)  # type: ignore[operator]
    return result


def act_on_pair(
    matrix: SparseMatrix, position: int, vector: Mapping[tuple[int, ...], LaurentPoly]
) -> Vector:
    """Two-factor operator on factors (position, position + 1)"""
    return act_on_factors(matrix, position, 2, vector)


def check_braiding_intertwines(V: WeightModule, W: WeightModule) -> list[str]:
    """Generators g for which sigma Delta(g) != Delta(g) sigma"""
    sigma = braiding(V, W).matrix
    source = TensorSpace([V, W])
    target = TensorSpace([W, V])
    failures = []
    for i in range(V.cd.rank):
        if sigma @ source.e_action(i) != target.e_action(i) @ sigma:
            failures.append(f"E{i + 1}")
        if sigma @ source.f_action(i) != target.f_action(i) @ sigma:
            failures.append(f"F{i + 1}")
    return failures


def check_yang_baxter(V: WeightModule, W: WeightModule, U: WeightModule) -> bool:
    """(s (x) 1)(1 (x) s)(s (x) 1) == (1 (x) s)(s (x) 1)(1 (x) s) on V (x) W (x) U"""
    s_vw = braiding(V, W).matrix
    s_vu = braiding(V, U).matrix
    s_wu = braiding(W, U).matrix
    for key in TensorSpace([V, W, U]).basis():
        start = {key: ONE}
        left = act_on_pair(s_wu, 0, act_on_pair(s_vu, 1, act_on_pair(s_vw, 0, start)))
        right = act_on_pair(s_vw, 1, act_on_pair(s_vu, 0, act_on_pair(s_wu, 1, start)))
        if left != right:
            return False
    return True


def highest_weight_vectors(V: WeightModule, W: WeightModule) -> dict[Weight, list[Vector]]:
    """Vectors of V (x) W killed by every Delta(E_i), grouped by weight, cleared of denominators"""
    space = TensorSpace([V, W])
    raisers = [space.e_action(i) for i in range(V.cd.rank)]
    by_weight: dict[Weight, list[Pair]] = {}
    for key in space.basis():
        by_weight.setdefault(space.weight(key), []).append(key)  # type: ignore[arg-type]
    found: dict[Weight, list[Vector]] = {}
    for weight, keys in by_weight.items():
        columns = [
            {(i, row): value for i, op in enumerate(raisers) for row, value in op.column(k).items()}
            for k in keys
        ]
        for solution in nullspace(columns):
            found.setdefault(weight, []).append(_clear_denominators(keys, solution))
    return found


def _clear_denominators(keys: Sequence[Pair], solution: Sequence[RatFunc]) -> Vector:
    common = ONE
    for value in solution:
        if value and not value.is_laurent():
            common = common * value.den
    return {
        key: (value * common).to_laurent()
        for key, value in zip(keys, solution, strict=True)
        if value
    }


def isotypic_scalars(V: WeightModule) -> dict[Weight, RatFunc]:
    """
    The scalar by which sigma_{V,V} acts on each one-dimensional line of
    highest weight vectors in V (x) V; raises if some line is not an eigenline
    """
    sigma = braiding(V, V).matrix
    scalars: dict[Weight, RatFunc] = {}
    for weight, vectors in highest_weight_vectors(V, V).items():
        if len(vectors) != 1:
            continue
        (vector,) = vectors
        image = sigma.apply(vector)
        pivot = next(iter(vector))
        scalar = RatFunc(image.get(pivot, ZERO)) / vector[pivot]
        for key, value in vector.items():
            if RatFunc(image.get(key, ZERO)) != scalar * value:
                raise InternalCheckError(f"sigma is not scalar on the highest weight line {weight}")
        if set(image) - set(vector):
            raise InternalCheckError(f"sigma leaves the highest weight line {weight}")
        scalars[weight] = scalar
    return scalars
