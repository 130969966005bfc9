"""
Module Commands

Describe V_lambda: dimension, weight multiplicities and quantum dimension.
"""

import argparse

from ..app import EXIT_OK, app
from ..dependencies import get_service
from ..domain.models import RepReport, format_weight, parse_weight
from ..exactalg import LaurentPoly
from ..settings.config import Config
from .common import add_algebra_option, emit, lie_type_of


def _configure(parser: argparse.ArgumentParser) -> None:
    add_algebra_option(parser)
    parser.add_argument("--weight", required=True, help="highest weight, e.g. 1,0")


def render_rep(report: RepReport) -> str:
    lines = [
        f"{report.algebra} [{format_weight(tuple(report.highest_weight))}]: "
        f"dim {report.dimension}" + (", minuscule" if report.minuscule else ""),
        f"quantum dimension: {LaurentPoly.from_json(report.quantum_dimension)}",
    ]
    lines += [f"  [{format_weight(tuple(w))}] x{m}" for w, m in report.weights]
    return "\n".join(lines)


@app.command("rep", "describe an irreducible module", _configure)
async def rep(args: argparse.Namespace, config: Config) -> int:
    lie_type = lie_type_of(config)
    weight = parse_weight(args.weight)
    service = await get_service()
    report = await service.describe_module(lie_type, weight)
    emit(config, render_rep(report), report)
    return EXIT_OK
