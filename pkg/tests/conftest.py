"""
Root test configuration and shared fixtures

Provides shared Polyfactory factories and helper functions used across all tests.
Specific test fixtures are in subdirectory conftest.py files.
"""

import random

import pytest
from polyfactory import Use
from polyfactory.factories import DataclassFactory
from polyfactory.factories.pydantic_factory import ModelFactory

from ribbon_invariants.domain.models import (
    CheckResult,
    Direction,
    LieType,
    ModuleRef,
    Slice,
    SliceKind,
    StoredBlock,
    StrandState,
    Tangle,
)
from ribbon_invariants.domain.tangle import braid_closure, build_tangle
from ribbon_invariants.exactalg import LaurentPoly
from ribbon_invariants.quantum.cartan import CartanData, cartan_data
from ribbon_invariants.quantum.conventions import CONVENTION_LEDGER_HASH

A1 = LieType(series="A", rank=1)
A2 = LieType(series="A", rank=2)
B2 = LieType(series="B", rank=2)
G2 = LieType(series="G", rank=2)


# ==========================================
# Polyfactory Factories for Test Data
# ==========================================


def _random_terms() -> tuple[tuple[int, int], ...]:
    return tuple(
        (random.randint(-6, 6), random.choice([-3, -2, -1, 1, 2, 3]))
        for _ in range(random.randint(0, 4))
    )


class LaurentPolyFactory(DataclassFactory[LaurentPoly]):
    """Small random Laurent polynomials in q^(1/2) for ring-axiom checks"""

    __model__ = LaurentPoly

    denom_scale = Use(lambda: random.choice([1, 2]))
    terms = Use(_random_terms)


class StrandStateFactory(ModelFactory[StrandState]):
    """Factory for A1 strand states"""

    __model__ = StrandState

    label = Use(lambda: (random.randint(1, 3),))


class CheckResultFactory(ModelFactory[CheckResult]):
    """Factory for CheckResult"""

    __model__ = CheckResult


class StoredBlockFactory(ModelFactory[StoredBlock]):
    """Factory for StoredBlock records under the current ledger"""

    __model__ = StoredBlock

    algebra = "A1"
    left = Use(lambda: ModuleRef(highest=(random.randint(1, 3),), dual=random.random() < 0.5))
    right = Use(lambda: ModuleRef(highest=(random.randint(1, 3),), dual=random.random() < 0.5))
    ledger_hash = CONVENTION_LEDGER_HASH
    matrix = Use(lambda: [[[0, 0], [0, 0], [[1, 1, 1]]]])


# ==========================================
# Fixtures
# ==========================================


@pytest.fixture
def a1() -> CartanData:
    return cartan_data(A1)


@pytest.fixture
def a2() -> CartanData:
    return cartan_data(A2)


@pytest.fixture
def b2() -> CartanData:
    return cartan_data(B2)


# ==========================================
# Helper Functions
# ==========================================


def create_sample_unknot(
    colour: int = 1, twists: int = 0, lie_type: LieType = A1, clockwise: bool = True
) -> Tangle:
    """A1 unknot of one colour with |twists| twist slices of the given sign"""
    label = (colour,) if lie_type == A1 else tuple([colour] + [0] * (lie_type.rank - 1))
    cup, cap = (
        (SliceKind.CUP_CW, SliceKind.CAP_CW)
        if clockwise
        else (SliceKind.CUP_CCW, SliceKind.CAP_CCW)
    )
    twist = SliceKind.TWIST_POS if twists > 0 else SliceKind.TWIST_NEG
    slices = [Slice(kind=cup, position=0, payload=label)]
    slices += [Slice(kind=twist, position=0) for _ in range(abs(twists))]
    slices.append(Slice(kind=cap, position=0))
    return build_tangle(lie_type, (), slices)


def create_sample_trefoil(colour: int = 1) -> Tangle:
    """Closure of s1^3 on two strands"""
    return braid_closure(A1, [1, 1, 1], [(colour,), (colour,)])


def create_sample_figure_eight(colour: int = 1) -> Tangle:
    """Closure of s1 s2^-1 s1 s2^-1 on three strands"""
    return braid_closure(A1, [1, -2, 1, -2], [(colour,)] * 3)


def create_sample_strand(colour: int = 1, direction: Direction = Direction.UP) -> StrandState:
    return StrandState(label=(colour,), direction=direction)


UNKNOT_TEXT = """\
# 0-framed unknot
algebra A1
bottom:
cup_cw 0 [1]
cap_cw 0
"""

TREFOIL_TEXT = """\
algebra A1
cup_cw 0 [1]
cup_cw 1 [1]
cross_pos 0
cross_pos 0
cross_pos 0
cap_cw 1
cap_cw 0
"""


# Export helper functions
__all__ = [
    "A1",
    "A2",
    "B2",
    "G2",
    "TREFOIL_TEXT",
    "UNKNOT_TEXT",
    "create_sample_figure_eight",
    "create_sample_strand",
    "create_sample_trefoil",
    "create_sample_unknot",
]
