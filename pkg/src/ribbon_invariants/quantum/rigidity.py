"""
Rigidity - Cups, caps and ribbon scalars

An up strand labelled lambda carries V_lambda, a down strand its literal
dual. Cups are stored as single-column matrices out of the empty tensor ()
and caps as single-row matrices into it, so the evaluator places them like
any other block.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..domain.models import RibbonChoice, Weight
from ..errors import InternalCheckError
from ..exactalg import ONE, ZERO, LaurentPoly, SparseMatrix, Vector, add_scaled, q_power
from .braiding import TensorSpace, act_on_factors, braiding
from .cache import KeyedCache
from .cartan import CartanData
from .repn import DualRepn, Repn, WeightModule, build_irrep, dual_repn, quantum_character

logger = logging.getLogger(__name__)

EMPTY: tuple[()] = ()


def ribbon_scalar(cd: CartanData, weight: Sequence[int], choice: RibbonChoice) -> LaurentPoly:
    """
    The unit by which the ribbon element acts on V_lambda; the
    Snyder-Tingley choice carries the extra sign (-1)^(2 rho^vee(lambda))
    """
    if not cd.is_dominant(weight):
        raise ValueError(f"highest weight {tuple(weight)} is not dominant")
    exponent = cd.pairing(weight, weight) + cd.two_rho_pairing(weight)
    return q_power(exponent, loop_sign(cd, weight, choice))


def loop_sign(cd: CartanData, weight: Sequence[int], choice: RibbonChoice) -> int:
    """Sign of the 0-framed unknot relative to the quantum dimension"""
    if choice is RibbonChoice.SNYDER_TINGLEY and cd.two_rho_check(weight) % 2:
        return -1
    return 1


@dataclass(frozen=True, eq=False)
class CupCapMaps:
    """
    The four duality blocks for one label:
    coev () -> V (x) V*, qtrace V (x) V* -> (),
    qcotrace () -> V* (x) V, ev V* (x) V -> ()
    """

    label: Weight
    choice: RibbonChoice
    dim: int
    coev: SparseMatrix
    ev: SparseMatrix
    qtrace: SparseMatrix
    qcotrace: SparseMatrix
    twist: LaurentPoly
    twist_power: int

    @property
    def unknot(self) -> LaurentPoly:
        """cup_cw followed by cap_cw"""
        return _close(self.coev, self.qtrace)

    @property
    def unknot_ccw(self) -> LaurentPoly:
        """cup_ccw followed by cap_ccw"""
        return _close(self.qcotrace, self.ev)


def _cup(vector: Vector) -> SparseMatrix:
    return SparseMatrix({EMPTY: vector})


def _cap(functional: Vector) -> SparseMatrix:
    return SparseMatrix({key: {EMPTY: value} for key, value in functional.items()})


def _close(cup: SparseMatrix, cap: SparseMatrix) -> LaurentPoly:
    return (cap @ cup).entry(EMPTY, EMPTY) or ZERO


def _candidate(
    rep: Repn, dual: WeightModule, twist: LaurentPoly, power: int, choice: RibbonChoice
) -> CupCapMaps:
    scale = twist**power
    canonical: Vector = {(a, a): ONE for a in rep.basis()}
    sigma = braiding(rep, dual).matrix
    qtrace: Vector = {}
    for pair, column in sigma.columns():
        value = sum((entry for (f, v), entry in column.items() if f == v), ZERO)  # type: ignore[misc]
        if value:
            qtrace[pair] = value * scale
    qcotrace: Vector = {}
    for pair in canonical:
        add_scaled(qcotrace, sigma.column(pair), scale)
    return CupCapMaps(
        label=rep.highest_weight,
        choice=choice,
        dim=rep.dim,
        coev=_cup(canonical),
        ev=_cap(canonical),
        qtrace=_cap(qtrace),
        qcotrace=_cup(qcotrace),
        twist=twist,
        twist_power=power,
    )


# === Self-checks ===


def _snake(dim: int, cup: SparseMatrix, cup_at: int, cap: SparseMatrix, cap_at: int) -> bool:
    for a in range(dim):
        created = act_on_factors(cup, cup_at, 0, {(a,): ONE})
        closed = act_on_factors(cap, cap_at, 2, created)  # type: ignore[arg-type]
        if closed != {(a,): ONE}:
            return False
    return True


def zigzag_failures(maps: CupCapMaps) -> list[str]:
    """The snake identities that fail to be identity matrices"""
    snakes = {
        "up strand: cup_cw then cap_ccw": (maps.coev, 0, maps.ev, 1),
        "up strand: cup_ccw then cap_cw": (maps.qcotrace, 1, maps.qtrace, 0),
        "down strand: cup_ccw then cap_cw": (maps.qcotrace, 0, maps.qtrace, 1),
        "down strand: cup_cw then cap_ccw": (maps.coev, 1, maps.ev, 0),
    }
    return [
        name
        for name, (cup, cup_at, cap, cap_at) in snakes.items()
        if not _snake(maps.dim, cup, cup_at, cap, cap_at)
    ]


def invariance_failures(maps: CupCapMaps, rep: Repn, dual: WeightModule) -> list[str]:
    """Cups must be killed by every generator, caps must annihilate every generator image"""
    up_down = TensorSpace([rep, dual])
    down_up = TensorSpace([dual, rep])
    failures = []
    for i in range(rep.cd.rank):
        for name, (first, second) in {
            f"E{i + 1}": (up_down.e_action(i), down_up.e_action(i)),
            f"F{i + 1}": (up_down.f_action(i), down_up.f_action(i)),
        }.items():
            if not (first @ maps.coev).is_zero():
                failures.append(f"coev not invariant under {name}")
            if not (maps.qtrace @ first).is_zero():
                failures.append(f"qtrace not invariant under {name}")
            if not (second @ maps.qcotrace).is_zero():
                failures.append(f"qcotrace not invariant under {name}")
            if not (maps.ev @ second).is_zero():
                failures.append(f"ev not invariant under {name}")
    return failures


# === Construction ===


def build_cupcap(rep: Repn, dual: DualRepn, choice: RibbonChoice) -> CupCapMaps:
    """
    Assemble the duality blocks, fixing the power of the ribbon scalar in
    qtrace and qcotrace as the one for which both snake identities close
    and the unknot equals the signed quantum dimension
    """
    cd = rep.cd
    twist = ribbon_scalar(cd, rep.highest_weight, choice)
    expected = quantum_character(rep) * loop_sign(cd, rep.highest_weight, choice)
    rejected = []
    for power in (1, -1):
        maps = _candidate(rep, dual.module, twist, power, choice)
        failures = zigzag_failures(maps)
        if maps.unknot != expected or maps.unknot_ccw != expected:
            failures.append(f"unknot {maps.unknot}, expected {expected}")
        if failures:
            rejected.append(f"power {power}: {'; '.join(failures)}")
            continue
        failures = invariance_failures(maps, rep, dual.module)
        if failures:
            raise InternalCheckError(f"V{rep.highest_weight}: {'; '.join(failures)}")
        logger.debug(
            "calibrated cups and caps for %s, %s ribbon: twist power %d",
            rep.key,
            choice.value,
            power,
        )
        return maps
    raise InternalCheckError(
        f"no ribbon-twist placement closes the zig-zags for V{rep.highest_weight}: "
        + " | ".join(rejected)
    )


_CUPCAPS: KeyedCache[tuple[str, Weight, RibbonChoice], CupCapMaps] = KeyedCache("cupcap")


def cupcap_for(cd: CartanData, label: Sequence[int], choice: RibbonChoice) -> CupCapMaps:
    """Cached duality blocks for a strand label"""
    highest = tuple(label)

    def build() -> CupCapMaps:
        rep = build_irrep(cd, highest)
        return build_cupcap(rep, dual_repn(rep), choice)

    return _CUPCAPS.get_or_build((cd.name, highest, choice), build)
