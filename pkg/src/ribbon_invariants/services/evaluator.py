"""
Evaluator - Tangle diagrams to exact operators

Slices are applied bottom to top to every column of a running sparse
matrix whose rows are basis tuples of the current boundary. Each block
touches only the factors it acts on; nothing is expanded to a full
Kronecker product.
"""

import logging
from dataclasses import dataclass, field

from ..domain.models import (
    ComponentData,
    Direction,
    InvarianceReport,
    RibbonChoice,
    SliceKind,
    StrandState,
    Tangle,
)
from ..domain.tangle import propagate, trace_components
from ..errors import InternalCheckError
from ..exactalg import ONE, ZERO, LaurentPoly, SparseMatrix, Vector, add_scaled
from ..exactalg.ratfunc import RatFunc
from ..quantum.braiding import act_on_factors, braiding, braiding_inverse
from ..quantum.cartan import CartanData, cartan_data
from ..quantum.repn import WeightModule, strand_module
from ..quantum.rigidity import cupcap_for, ribbon_scalar

logger = logging.getLogger(__name__)

BasisKey = tuple[int, ...]


@dataclass
class EvalState:
    """Operator from the bottom boundary space to the current boundary space"""

    boundary: tuple[StrandState, ...]
    columns: dict[BasisKey, Vector] = field(default_factory=dict)

    def as_matrix(self) -> SparseMatrix:
        return SparseMatrix(self.columns)


def _module(cd: CartanData, strand: StrandState) -> WeightModule:
    return strand_module(cd, strand.label, strand.direction is Direction.UP)


def _initial_state(cd: CartanData, tangle: Tangle) -> EvalState:
    keys: list[BasisKey] = [()]
    for strand in tangle.bottom:
        size = _module(cd, strand).dim
        keys = [key + (a,) for key in keys for a in range(size)]
    return EvalState(tangle.bottom, {key: {key: ONE} for key in keys})


def _apply_slice(
    cd: CartanData, state: EvalState, index: int, tangle: Tangle, choice: RibbonChoice
) -> EvalState:
    slice_ = tangle.slices[index]
    kind = slice_.kind
    i = slice_.position
    strands = state.boundary
    block: SparseMatrix | None = None
    arity = 2
    scalar: LaurentPoly | None = None
    match kind:
        case SliceKind.CROSS_POS:
            block = braiding(_module(cd, strands[i]), _module(cd, strands[i + 1])).matrix
        case SliceKind.CROSS_NEG:
            block = braiding_inverse(_module(cd, strands[i + 1]), _module(cd, strands[i])).matrix
        case SliceKind.CUP_CW | SliceKind.CUP_CCW:
            assert slice_.payload is not None
            maps = cupcap_for(cd, slice_.payload, choice)
            block = maps.coev if kind is SliceKind.CUP_CW else maps.qcotrace
            arity = 0
        case SliceKind.CAP_CW | SliceKind.CAP_CCW:
            maps = cupcap_for(cd, strands[i].label, choice)
            block = maps.qtrace if kind is SliceKind.CAP_CW else maps.ev
        case SliceKind.TWIST_POS | SliceKind.TWIST_NEG:
            scalar = ribbon_scalar(cd, strands[i].label, choice)
            if kind is SliceKind.TWIST_NEG:
                scalar = scalar.unit_inverse()
    columns: dict[BasisKey, Vector] = {}
    for key, vector in state.columns.items():
        if scalar is not None:
            image: Vector = {}
            add_scaled(image, vector, scalar)
        else:
            assert block is not None
            image = act_on_factors(block, i, arity, vector)  # type: ignore[arg-type]
        if image:
            columns[key] = image
    boundary = propagate(strands, slice_, index, tangle.algebra)
    return EvalState(boundary, columns)


def evaluate(tangle: Tangle, choice: RibbonChoice) -> SparseMatrix:
    """
    The operator of a tangle from its bottom boundary space to its top
    boundary space; a closed link gives the 1x1 matrix keyed by ()
    """
    cd = cartan_data(tangle.algebra)
    state = _initial_state(cd, tangle)
    for index in range(len(tangle.slices)):
        state = _apply_slice(cd, state, index, tangle, choice)
    logger.debug(
        "evaluated %d slices under the %s ribbon: %d nonzero entries",
        len(tangle.slices),
        choice.value,
        state.as_matrix().nnz(),
    )
    return state.as_matrix()


def evaluate_closed(tangle: Tangle, choice: RibbonChoice) -> LaurentPoly:
    """The invariant of a closed link"""
    if not tangle.is_closed:
        raise ValueError("evaluate_closed needs a closed tangle")
    return evaluate(tangle, choice).entry((), ()) or ZERO


# === Ribbon choices and framing ===


def predicted_ratio(tangle: Tangle, data: ComponentData | None = None) -> int:
    """prod over components of (-1)^(2 rho^vee(lambda_i) (wr_i - 1))"""
    cd = cartan_data(tangle.algebra)
    components = data or trace_components(tangle)
    exponent = sum(
        cd.two_rho_check(c.label) * (c.writhe - 1) for c in components.components
    )
    return -1 if exponent % 2 else 1


def st_standard_ratio(tangle: Tangle) -> int | None:
    """
    evaluate(ST) / evaluate(standard) as +1 or -1; None when the standard
    value vanishes and the ratio is undefined
    """
    st = evaluate_closed(tangle, RibbonChoice.SNYDER_TINGLEY)
    standard = evaluate_closed(tangle, RibbonChoice.STANDARD)
    if standard.is_zero():
        return None
    if st == standard:
        return 1
    if st == -standard:
        return -1
    raise InternalCheckError(f"ribbon values {st} and {standard} differ by more than a sign")


def unframed_invariant(tangle: Tangle, choice: RibbonChoice) -> LaurentPoly:
    """The invariant with each component's framing removed by theta^(-writhe)"""
    cd = cartan_data(tangle.algebra)
    value = evaluate_closed(tangle, choice)
    for component in trace_components(tangle).components:
        value = value * ribbon_scalar(cd, component.label, choice) ** (-component.writhe)
    return value


def normalized_invariant(tangle: Tangle, choice: RibbonChoice) -> RatFunc:
    """A knot's unframed invariant divided by the unknot of the same colour"""
    components = trace_components(tangle).components
    if len(components) != 1:
        raise ValueError(f"normalized_invariant needs a knot, got {len(components)} components")
    unknot = cupcap_for(cartan_data(tangle.algebra), components[0].label, choice).unknot
    return RatFunc(unframed_invariant(tangle, choice)) / unknot


def invariance_suite(first: Tangle, second: Tangle) -> InvarianceReport:
    """Evaluate two presentations under both ribbon choices and compare"""
    first_labels = sorted(c.label for c in trace_components(first).components)
    second_labels = sorted(c.label for c in trace_components(second).components)
    if first_labels != second_labels:
        raise ValueError("presentations carry different component labels")
    values: tuple[dict[str, str], dict[str, str]] = ({}, {})
    equal = True
    for choice in RibbonChoice:
        left = evaluate_closed(first, choice)
        right = evaluate_closed(second, choice)
        values[0][choice.value] = str(left)
        values[1][choice.value] = str(right)
        equal = equal and left == right
    return InvarianceReport(first=values[0], second=values[1], equal=equal)
