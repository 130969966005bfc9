"""
Invariant Commands

Evaluate tangle files or braid closures, compare the two ribbon choices and
compare two presentations of the same link.
"""

import argparse
from pathlib import Path

from ..app import EXIT_INTERNAL, EXIT_OK, app
from ..dependencies import get_service
from ..domain.models import InvariantReport, LieType, Tangle, Weight
from ..domain.tangle import braid_closure, parse_braid_word, parse_tangle
from ..exactalg import LaurentPoly, SparseMatrix
from ..settings.config import Config
from .common import (
    add_algebra_option,
    add_ribbon_option,
    emit,
    lie_type_of,
    parse_weight_list,
    read_text,
)


def _configure_invariant(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--tangle", type=Path, help="tangle file")
    source.add_argument("--braid", help="signed braid word such as '1 1 1' or '1,-2,1,-2'")
    parser.add_argument("--labels", help="strand colours for --braid, e.g. '1;1'")
    add_algebra_option(parser)
    add_ribbon_option(parser)
    parser.add_argument("--both", action="store_true", help="both ribbon values and their ratio")
    parser.add_argument("--unframed", action="store_true", help="remove blackboard framing")
    parser.add_argument(
        "--normalized", action="store_true", help="also divide a knot by its unknot"
    )


def load_tangle(
    tangle_path: Path | None,
    braid: str | None,
    labels: str | None,
    config: Config,
    algebra_given: bool = False,
) -> Tangle:
    """A tangle from a file, or the closure of a braid word in the configured algebra"""
    lie_type = lie_type_of(config)
    if tangle_path is not None:
        tangle = parse_tangle(read_text(tangle_path))
        if algebra_given and tangle.algebra != lie_type:
            raise ValueError(
                f"{tangle_path} declares {tangle.algebra.name}, --algebra gives {config.algebra}"
            )
        return tangle
    word = parse_braid_word(braid or "")
    colours = parse_weight_list(labels) if labels else _default_labels(lie_type, word)
    return braid_closure(lie_type, word, colours)


def _default_labels(lie_type: LieType, word: list[int]) -> list[Weight]:
    """The first fundamental weight on every strand the word touches"""
    strands = max((abs(g) for g in word), default=0) + 1
    first = tuple(1 if i == 0 else 0 for i in range(lie_type.rank))
    return [first] * strands


def render_invariant(report: InvariantReport) -> str:
    if report.matrix is not None:
        matrix = SparseMatrix.from_json(report.matrix)
        lines = [f"{row} <- {column}: {value}" for row, column, value in matrix.entries()]
        return "\n".join(lines) if lines else "0"
    text = str(LaurentPoly.from_json(report.invariant))
    if report.normalized is not None:
        text += f"\nnormalized: {report.normalized}"
    return text


@app.command("invariant", "evaluate a tangle or braid closure", _configure_invariant)
async def invariant(args: argparse.Namespace, config: Config) -> int:
    tangle = load_tangle(args.tangle, args.braid, args.labels, config, bool(args.algebra))
    service = await get_service()
    if args.both:
        ratio = await service.compare_ribbons(tangle)
        text = "\n".join(
            [
                f"st: {LaurentPoly.from_json(ratio.st)}",
                f"standard: {LaurentPoly.from_json(ratio.standard)}",
                f"ratio: {ratio.ratio if ratio.ratio is not None else 'undefined'}",
                f"predicted: {ratio.predicted_ratio}",
            ]
        )
        emit(config, text, ratio)
        return EXIT_OK
    report = await service.compute_invariant(
        tangle, config.ribbon, unframed=args.unframed, normalized=args.normalized
    )
    emit(config, render_invariant(report), report)
    return EXIT_OK


def _configure_compare(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("first", type=Path, help="tangle file")
    parser.add_argument("second", type=Path, help="tangle file")


@app.command("compare", "compare two presentations under both ribbons", _configure_compare)
async def compare(args: argparse.Namespace, config: Config) -> int:
    first = parse_tangle(read_text(args.first))
    second = parse_tangle(read_text(args.second))
    service = await get_service()
    report = await service.compare_presentations(first, second)
    lines = [
        f"{choice}: {report.first[choice]} | {report.second[choice]}" for choice in report.first
    ]
    lines.append("EQUAL" if report.equal else "DIFFERENT")
    emit(config, "\n".join(lines), report)
    return EXIT_OK if report.equal else EXIT_INTERNAL
