"""
Domain Models - Core value types with Pydantic validation

Lie types, weights, tangle slices and strand states, component data and
the reports the command line prints. All models are frozen so they can be
used as cache keys and shared between threads.
"""

import re
from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

# Fundamental-weight coordinates, entry i = alpha_i^vee(lambda)
Weight = tuple[int, ...]

Series = Literal["A", "B", "C", "D", "E", "F", "G"]

_ALGEBRA_PATTERN = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def parse_weight(text: str) -> Weight:
    """Parse '1,0,2' into a weight tuple"""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty weight")
    try:
        return tuple(int(part) for part in stripped.split(","))
    except ValueError as exc:
        raise ValueError(f"invalid weight '{text}'") from exc


def format_weight(weight: Weight) -> str:
    return ",".join(str(c) for c in weight)


# === Lie types ===


class LieType(BaseModel):
    """Finite-type simple Lie algebra, Bourbaki numbering"""

    model_config = ConfigDict(frozen=True)

    series: Series
    rank: int = Field(ge=1)

    @model_validator(mode="after")
    def validate_rank(self) -> "LieType":
        minimum = {"A": 1, "B": 2, "C": 2, "D": 3}
        allowed = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
        if self.series in minimum and self.rank < minimum[self.series]:
            raise ValueError(f"{self.series}{self.rank} is not a simple Lie algebra")
        if self.series in allowed and self.rank not in allowed[self.series]:
            raise ValueError(f"{self.series}{self.rank} is not a simple Lie algebra")
        return self

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse 'A1', 'B3', 'G2'"""
        match = _ALGEBRA_PATTERN.match(text)
        if not match:
            raise ValueError(f"unknown algebra '{text}'")
        return cls(series=match.group(1).upper(), rank=int(match.group(2)))  # type: ignore[arg-type]

    def __str__(self) -> str:
        return self.name


# === Enums ===


class RibbonChoice(str, Enum):
    """Ribbon element used for twists and quantum traces"""

    SNYDER_TINGLEY = "st"
    STANDARD = "standard"


class Direction(str, Enum):
    UP = "up"
    DOWN = "down"

    def reversed(self) -> "Direction":
        return Direction.DOWN if self is Direction.UP else Direction.UP


class SliceKind(str, Enum):
    """Elementary tangle pieces"""

    CROSS_POS = "cross_pos"
    CROSS_NEG = "cross_neg"
    CUP_CW = "cup_cw"
    CUP_CCW = "cup_ccw"
    CAP_CW = "cap_cw"
    CAP_CCW = "cap_ccw"
    TWIST_POS = "twist_pos"
    TWIST_NEG = "twist_neg"

    @property
    def is_crossing(self) -> bool:
        return self in (SliceKind.CROSS_POS, SliceKind.CROSS_NEG)

    @property
    def is_cup(self) -> bool:
        return self in (SliceKind.CUP_CW, SliceKind.CUP_CCW)

    @property
    def is_cap(self) -> bool:
        return self in (SliceKind.CAP_CW, SliceKind.CAP_CCW)

    @property
    def is_twist(self) -> bool:
        return self in (SliceKind.TWIST_POS, SliceKind.TWIST_NEG)


# === Tangle pieces ===


class StrandState(BaseModel):
    """Colour and orientation of one boundary strand"""

    model_config = ConfigDict(frozen=True)

    label: Weight
    direction: Direction


class Slice(BaseModel):
    """One elementary piece acting at a boundary position"""

    model_config = ConfigDict(frozen=True)

    kind: SliceKind
    position: int = Field(ge=0)
    payload: Weight | None = None

    @model_validator(mode="after")
    def validate_payload(self) -> "Slice":
        if self.kind.is_cup and self.payload is None:
            raise ValueError(f"{self.kind.value} needs a weight payload")
        if not self.kind.is_cup and self.payload is not None:
            raise ValueError(f"{self.kind.value} takes no payload")
        return self


class Tangle(BaseModel):
    """
    Validated stack of slices read bottom to top.

    Build through domain.tangle.build_tangle, which propagates the boundary
    and fills in top.
    """

    model_config = ConfigDict(frozen=True)

    algebra: LieType
    bottom: tuple[StrandState, ...] = ()
    slices: tuple[Slice, ...] = ()
    top: tuple[StrandState, ...] = ()

    @property
    def is_closed(self) -> bool:
        return not self.bottom and not self.top


class Component(BaseModel):
    """One link component"""

    model_config = ConfigDict(frozen=True)

    index: int
    label: Weight
    writhe: int
    segments: int = Field(ge=1)


class ComponentData(BaseModel):
    """Partition of strand segments into components, with writhe and colour"""

    model_config = ConfigDict(frozen=True)

    components: tuple[Component, ...]

    @property
    def writhe(self) -> dict[int, int]:
        return {c.index: c.writhe for c in self.components}

    @property
    def labels(self) -> dict[int, Weight]:
        return {c.index: c.label for c in self.components}


# === Reports ===


class ComponentSummary(BaseModel):
    label: list[int]
    writhe: int


class InvariantReport(BaseModel):
    """JSON schema of the invariant command"""

    algebra: str
    ribbon: str
    components: list[ComponentSummary]
    invariant: list[list[int]]
    homology_finite: bool | None = None
    # Open tangles report their operator instead of a scalar
    matrix: list[list[Any]] | None = None
    # Knots only: invariant over the unknot of the same colour
    normalized: str | None = None


class RatioReport(BaseModel):
    """Both ribbon values of a closed link and their ratio"""

    st: list[list[int]]
    standard: list[list[int]]
    ratio: int | None
    predicted_ratio: int


class RepReport(BaseModel):
    algebra: str
    highest_weight: list[int]
    dimension: int
    minuscule: bool
    weights: list[tuple[list[int], int]]
    quantum_dimension: list[list[int]]


class HomologyReport(BaseModel):
    """Truncated colour-2 unknot Poincare series against its closed form"""

    t_max: int
    series: dict[str, Any]
    mismatches: list[int]
    matches_closed_form: bool
    euler_characteristic: list[list[int]]


class CheckResult(BaseModel):
    suite: str
    case: str
    passed: bool
    detail: str = ""


class InvarianceReport(BaseModel):
    """Values of two presentations under both ribbon choices"""

    first: dict[str, str]
    second: dict[str, str]
    equal: bool


# === Persisted blocks ===


class ModuleRef(BaseModel):
    """V_lambda or its literal dual, as stored on disk"""

    model_config = ConfigDict(frozen=True)

    highest: Weight
    dual: bool = False


class StoredBlock(BaseModel):
    """
    A braid block in the JSON matrix schema, keyed by algebra, source
    modules, direction and the hash of the convention ledger it was built under
    """

    model_config = ConfigDict(frozen=True)

    algebra: str
    left: ModuleRef
    right: ModuleRef
    inverse: bool
    ledger_hash: str
    matrix: list[list[Any]] = Field(default_factory=list)

    @property
    def block_id(self) -> str:
        left = f"{format_weight(self.left.highest)}{'*' if self.left.dual else ''}"
        right = f"{format_weight(self.right.highest)}{'*' if self.right.dual else ''}"
        direction = "inv" if self.inverse else "fwd"
        return f"{self.algebra}:{left}|{right}:{direction}:{self.ledger_hash[:16]}"
