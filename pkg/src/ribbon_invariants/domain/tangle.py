"""
Tangle Diagrams - Parsing, validation, component tracing and rewrites

File format, one directive per line, '#' starts a comment:

    algebra A1
    bottom: [1;up] [1;down]
    cup_cw 0 [1]
    cross_pos 1
    cap_ccw 0

Positions are 0-based from the left; weights are comma-separated
fundamental-weight coordinates. A cup creates two strands carrying its
label, an up strand carries V_label and a down strand its dual.
"""

import logging
import re
from collections.abc import Iterable, Sequence

from pydantic import ValidationError

from ..errors import TangleParseError, TangleValidationError
from .models import (
    Component,
    ComponentData,
    Direction,
    LieType,
    Slice,
    SliceKind,
    StrandState,
    Tangle,
    Weight,
    format_weight,
    parse_weight,
)

logger = logging.getLogger(__name__)

UP = Direction.UP
DOWN = Direction.DOWN

# Left strand of a cup or cap; the right strand runs the other way
_LEFT_DIRECTION: dict[SliceKind, Direction] = {
    SliceKind.CUP_CW: UP,
    SliceKind.CAP_CW: UP,
    SliceKind.CUP_CCW: DOWN,
    SliceKind.CAP_CCW: DOWN,
}


def _pair_directions(kind: SliceKind) -> tuple[Direction, Direction]:
    left = _LEFT_DIRECTION[kind]
    return left, left.reversed()

_STRAND_PATTERN = re.compile(r"\[\s*([-\d,\s]+?)\s*;\s*(up|down)\s*\]")
_SLICE_PATTERN = re.compile(r"^(\w+)\s+(\S+)(?:\s+\[\s*([-\d,\s]+?)\s*\])?$")


# ==========================================
# Validation
# ==========================================


def _check_label(lie_type: LieType, label: Weight) -> str | None:
    if len(label) != lie_type.rank:
        return (
            f"label {format_weight(label)} has {len(label)} entries, "
            f"{lie_type.name} has rank {lie_type.rank}"
        )
    if any(c < 0 for c in label):
        return f"label {format_weight(label)} is not dominant"
    return None


def propagate(
    boundary: Sequence[StrandState], slice_: Slice, index: int, lie_type: LieType
) -> tuple[StrandState, ...]:
    """The boundary above one slice, or TangleValidationError"""
    strands = list(boundary)
    kind = slice_.kind
    i = slice_.position
    width = 0 if kind.is_cup else 2 if kind.is_crossing or kind.is_cap else 1
    if i + width > len(strands) or (kind.is_cup and i > len(strands)):
        raise TangleValidationError(
            index, f"boundary mismatch: {kind.value} at {i} on {len(strands)} strands"
        )
    if kind.is_crossing:
        strands[i], strands[i + 1] = strands[i + 1], strands[i]
    elif kind.is_cup:
        assert slice_.payload is not None
        problem = _check_label(lie_type, slice_.payload)
        if problem:
            raise TangleValidationError(index, problem)
        left, right = _pair_directions(kind)
        strands[i:i] = [
            StrandState(label=slice_.payload, direction=left),
            StrandState(label=slice_.payload, direction=right),
        ]
    elif kind.is_cap:
        first, second = strands[i], strands[i + 1]
        expected = _pair_directions(kind)
        if (first.direction, second.direction) != expected:
            raise TangleValidationError(
                index,
                f"cap orientation violation: {kind.value} needs "
                f"({expected[0].value}, {expected[1].value}), "
                f"found ({first.direction.value}, {second.direction.value})",
            )
        if first.label != second.label:
            raise TangleValidationError(
                index,
                f"cap label mismatch: {format_weight(first.label)} "
                f"against {format_weight(second.label)}",
            )
        del strands[i : i + 2]
    return tuple(strands)


def build_tangle(
    lie_type: LieType,
    bottom: Iterable[StrandState],
    slices: Iterable[Slice],
) -> Tangle:
    """Propagate the boundary slice by slice and return the validated Tangle"""
    start = tuple(bottom)
    for strand in start:
        problem = _check_label(lie_type, strand.label)
        if problem:
            raise TangleValidationError(0, f"bottom boundary: {problem}")
    pieces = tuple(slices)
    boundary = start
    for index, slice_ in enumerate(pieces):
        boundary = propagate(boundary, slice_, index, lie_type)
    return Tangle(algebra=lie_type, bottom=start, slices=pieces, top=boundary)


# ==========================================
# Text format
# ==========================================


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_bottom(text: str, number: int) -> tuple[StrandState, ...]:
    strands = []
    remainder = _STRAND_PATTERN.sub("", text).strip()
    if remainder:
        raise TangleParseError(number, f"unreadable boundary entry '{remainder}'")
    for match in _STRAND_PATTERN.finditer(text):
        try:
            label = parse_weight(match.group(1))
        except ValueError as exc:
            raise TangleParseError(number, str(exc)) from exc
        strands.append(StrandState(label=label, direction=Direction(match.group(2))))
    return tuple(strands)


def _parse_slice(text: str, number: int) -> Slice:
    match = _SLICE_PATTERN.match(text)
    if not match:
        raise TangleParseError(number, f"unreadable slice '{text}'")
    name, position, payload = match.groups()
    try:
        kind = SliceKind(name)
    except ValueError as exc:
        raise TangleParseError(number, f"unknown directive '{name}'") from exc
    try:
        index = int(position)
    except ValueError as exc:
        raise TangleParseError(number, f"position '{position}' is not an integer") from exc
    try:
        weight = parse_weight(payload) if payload is not None else None
        return Slice(kind=kind, position=index, payload=weight)
    except ValidationError as exc:
        reason = "; ".join(error["msg"] for error in exc.errors())
        raise TangleParseError(number, reason) from exc
    except ValueError as exc:
        raise TangleParseError(number, str(exc)) from exc


def parse_tangle(text: str) -> Tangle:
    """
    Read a tangle file. Syntax problems raise TangleParseError with the line
    number; boundary problems raise TangleValidationError with the slice index.
    """
    lie_type: LieType | None = None
    bottom: tuple[StrandState, ...] = ()
    slices: list[Slice] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("algebra"):
            if lie_type is not None:
                raise TangleParseError(number, "algebra given twice")
            name = line.removeprefix("algebra").strip()
            try:
                lie_type = LieType.parse(name)
            except (ValueError, ValidationError) as exc:
                raise TangleParseError(number, f"unknown algebra '{name}'") from exc
            continue
        if lie_type is None:
            raise TangleParseError(number, "the first directive must be 'algebra <name>'")
        if line.startswith("bottom:"):
            if slices:
                raise TangleParseError(number, "bottom must precede the slices")
            bottom = _parse_bottom(line.removeprefix("bottom:"), number)
            continue
        slices.append(_parse_slice(line, number))
    if lie_type is None:
        raise TangleParseError(1, "missing 'algebra <name>' directive")
    tangle = build_tangle(lie_type, bottom, slices)
    logger.debug("parsed %s tangle with %d slices", lie_type.name, len(slices))
    return tangle


def render_tangle(tangle: Tangle) -> str:
    """Text form that parse_tangle reads back to an equal Tangle"""
    lines = [f"algebra {tangle.algebra.name}"]
    if tangle.bottom:
        strands = " ".join(
            f"[{format_weight(s.label)};{s.direction.value}]" for s in tangle.bottom
        )
        lines.append(f"bottom: {strands}")
    for slice_ in tangle.slices:
        line = f"{slice_.kind.value} {slice_.position}"
        if slice_.payload is not None:
            line += f" [{format_weight(slice_.payload)}]"
        lines.append(line)
    return "\n".join(lines) + "\n"


def tangle_to_json(tangle: Tangle) -> dict[str, object]:
    return tangle.model_dump(mode="json")


# ==========================================
# Components and writhe
# ==========================================


class _UnionFind:
    def __init__(self) -> None:
        self.parent: list[int] = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def crossing_sign(kind: SliceKind, first: StrandState, second: StrandState) -> int:
    """Sign of a crossing in the oriented diagram"""
    sign = 1 if kind is SliceKind.CROSS_POS else -1
    return sign if first.direction is second.direction else -sign


def trace_components(tangle: Tangle) -> ComponentData:
    """Group strand segments into link components and total each component's writhe"""
    if not tangle.is_closed:
        raise ValueError("trace_components needs a closed tangle")
    segments = _UnionFind()
    labels: list[Weight] = []
    current: list[int] = []
    states: list[StrandState] = []
    signed: list[tuple[int, int, int]] = []
    for slice_ in tangle.slices:
        kind = slice_.kind
        i = slice_.position
        if kind.is_cup:
            assert slice_.payload is not None
            left, right = segments.add(), segments.add()
            segments.union(left, right)
            labels.extend([slice_.payload, slice_.payload])
            current[i:i] = [left, right]
        elif kind.is_cap:
            segments.union(current[i], current[i + 1])
            del current[i : i + 2]
        elif kind.is_crossing:
            sign = crossing_sign(kind, states[i], states[i + 1])
            signed.append((current[i], current[i + 1], sign))
            current[i], current[i + 1] = current[i + 1], current[i]
        else:
            sign = 1 if kind is SliceKind.TWIST_POS else -1
            signed.append((current[i], current[i], sign))
        states = list(propagate(states, slice_, 0, tangle.algebra))

    roots: dict[int, int] = {}
    sizes: dict[int, int] = {}
    for segment in range(len(labels)):
        root = segments.find(segment)
        roots.setdefault(root, len(roots))
        sizes[root] = sizes.get(root, 0) + 1
    writhe = dict.fromkeys(roots, 0)
    for first, second, sign in signed:
        root = segments.find(first)
        if root == segments.find(second):
            writhe[root] += sign
    components = tuple(
        Component(index=index, label=labels[root], writhe=writhe[root], segments=sizes[root])
        for root, index in roots.items()
    )
    return ComponentData(components=components)


def homology_is_finite(tangle: Tangle) -> bool:
    """True when every strand label is minuscule"""
    from ..quantum.cartan import cartan_data

    cd = cartan_data(tangle.algebra)
    labels = {s.payload for s in tangle.slices if s.payload is not None}
    labels.update(s.label for s in tangle.bottom)
    return all(cd.is_minuscule(label) for label in labels)


# ==========================================
# Constructors and rewrites
# ==========================================


def braid_closure(
    lie_type: LieType, word: Sequence[int], labels: Sequence[Weight]
) -> Tangle:
    """
    Markov closure of a signed braid word on len(labels) strands;
    generator +k / -k crosses strands k and k+1 (1-based)
    """
    n = len(labels)
    if n < 1:
        raise ValueError("a braid closure needs at least one strand")
    slices = [Slice(kind=SliceKind.CUP_CW, position=k, payload=tuple(labels[k])) for k in range(n)]
    for generator in word:
        k = abs(generator)
        if generator == 0 or k >= n:
            raise ValueError(f"braid generator {generator} out of range for {n} strands")
        kind = SliceKind.CROSS_POS if generator > 0 else SliceKind.CROSS_NEG
        slices.append(Slice(kind=kind, position=k - 1))
    slices.extend(Slice(kind=SliceKind.CAP_CW, position=k) for k in reversed(range(n)))
    return build_tangle(lie_type, (), slices)


def parse_braid_word(text: str) -> list[int]:
    """'1 1 -2' or '1,1,-2' into signed generators"""
    tokens = text.replace(",", " ").split()
    try:
        return [int(token) for token in tokens]
    except ValueError as exc:
        raise ValueError(f"invalid braid word '{text}'") from exc


_MIRROR = {
    SliceKind.CROSS_POS: SliceKind.CROSS_NEG,
    SliceKind.CROSS_NEG: SliceKind.CROSS_POS,
    SliceKind.TWIST_POS: SliceKind.TWIST_NEG,
    SliceKind.TWIST_NEG: SliceKind.TWIST_POS,
}


def mirror(tangle: Tangle) -> Tangle:
    """Swap every crossing and twist"""
    slices = [
        s.model_copy(update={"kind": _MIRROR.get(s.kind, s.kind)}) for s in tangle.slices
    ]
    return build_tangle(tangle.algebra, tangle.bottom, slices)


def _boundary_before(tangle: Tangle, index: int) -> tuple[StrandState, ...]:
    boundary = tangle.bottom
    for k, slice_ in enumerate(tangle.slices[:index]):
        boundary = propagate(boundary, slice_, k, tangle.algebra)
    return boundary


def _insert(tangle: Tangle, index: int, pieces: Sequence[Slice]) -> Tangle:
    if not 0 <= index <= len(tangle.slices):
        raise ValueError(f"slice index {index} out of range")
    slices = [*tangle.slices[:index], *pieces, *tangle.slices[index:]]
    return build_tangle(tangle.algebra, tangle.bottom, slices)


def insert_reidemeister_ii(tangle: Tangle, index: int, position: int) -> Tangle:
    """A cancelling positive and negative crossing before slice index"""
    return _insert(
        tangle,
        index,
        [
            Slice(kind=SliceKind.CROSS_POS, position=position),
            Slice(kind=SliceKind.CROSS_NEG, position=position),
        ],
    )


def insert_reidemeister_iii(tangle: Tangle, index: int, position: int) -> Tangle:
    """s_i s_i+1 s_i followed by the inverse of s_i+1 s_i s_i+1"""
    pattern = [
        (SliceKind.CROSS_POS, 0),
        (SliceKind.CROSS_POS, 1),
        (SliceKind.CROSS_POS, 0),
        (SliceKind.CROSS_NEG, 1),
        (SliceKind.CROSS_NEG, 0),
        (SliceKind.CROSS_NEG, 1),
    ]
    return _insert(
        tangle, index, [Slice(kind=kind, position=position + k) for kind, k in pattern]
    )


def insert_s_move(tangle: Tangle, index: int, position: int, variant: int = 0) -> Tangle:
    """A zig-zag on the strand at position, bent one way (variant 0) or the other (1)"""
    boundary = _boundary_before(tangle, index)
    if position >= len(boundary):
        raise ValueError(f"no strand at position {position}")
    strand = boundary[position]
    first, second = (
        (SliceKind.CUP_CW, SliceKind.CAP_CCW)
        if strand.direction is UP
        else (SliceKind.CUP_CCW, SliceKind.CAP_CW)
    )
    if variant == 0:
        pieces = [
            Slice(kind=first, position=position, payload=strand.label),
            Slice(kind=second, position=position + 1),
        ]
    else:
        cup = SliceKind.CUP_CCW if first is SliceKind.CUP_CW else SliceKind.CUP_CW
        cap = SliceKind.CAP_CW if second is SliceKind.CAP_CCW else SliceKind.CAP_CCW
        pieces = [
            Slice(kind=cup, position=position + 1, payload=strand.label),
            Slice(kind=cap, position=position),
        ]
    return _insert(tangle, index, pieces)


def insert_twist_pair(tangle: Tangle, index: int, position: int) -> Tangle:
    """A positive and a negative twist that cancel"""
    return _insert(
        tangle,
        index,
        [
            Slice(kind=SliceKind.TWIST_POS, position=position),
            Slice(kind=SliceKind.TWIST_NEG, position=position),
        ],
    )


def insert_free_loop(tangle: Tangle, index: int, position: int, label: Weight) -> Tangle:
    """A counterclockwise loop of colour label that crosses nothing"""
    return _insert(
        tangle,
        index,
        [
            Slice(kind=SliceKind.CUP_CCW, position=position, payload=tuple(label)),
            Slice(kind=SliceKind.CAP_CCW, position=position),
        ],
    )


def insert_loop_pass(
    tangle: Tangle, index: int, position: int, label: Weight, positive: bool = True
) -> Tangle:
    """
    A counterclockwise loop of colour label opened to the right of the strand
    at position; the strand crosses its down leg, then its up leg, with the
    same crossing kind both times, and the loop closes on the left. Isotopic
    to the tangle with a free loop of the same colour.
    """
    boundary = _boundary_before(tangle, index)
    if position >= len(boundary):
        raise ValueError(f"no strand at position {position}")
    kind = SliceKind.CROSS_POS if positive else SliceKind.CROSS_NEG
    return _insert(
        tangle,
        index,
        [
            Slice(kind=SliceKind.CUP_CCW, position=position + 1, payload=tuple(label)),
            Slice(kind=kind, position=position),
            Slice(kind=kind, position=position + 1),
            Slice(kind=SliceKind.CAP_CCW, position=position),
        ],
    )


def strand_count(tangle: Tangle, index: int) -> int:
    """Number of strands just below slice index"""
    return len(_boundary_before(tangle, index))
