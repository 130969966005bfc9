"""
Homology Commands
"""

import argparse

from ..app import EXIT_INTERNAL, EXIT_OK, app
from ..dependencies import get_service
from ..domain.models import HomologyReport
from ..exactalg import BiGradedSeries, LaurentPoly
from ..settings.config import Config
from .common import emit


def _configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tmax", type=int, default=20, help="truncation order in t (>= 4)")


def render_homology(report: HomologyReport) -> str:
    series = BiGradedSeries(
        report.series["t_min"],
        report.series["t_max"],
        {int(k): LaurentPoly.from_json(v) for k, v in report.series["coeffs"].items()},
    )
    verdict = "PASS" if report.matches_closed_form else f"FAIL at t^{report.mismatches}"
    return "\n".join(
        [
            series.to_text(),
            f"closed form: {verdict}",
            f"euler characteristic: {LaurentPoly.from_json(report.euler_characteristic)}",
        ]
    )


@app.command("unknot-homology", "colour-2 sl2 unknot Poincare series", _configure)
async def unknot_homology(args: argparse.Namespace, config: Config) -> int:
    service = await get_service()
    report = await service.unknot_homology(args.tmax)
    emit(config, render_homology(report), report)
    return EXIT_OK if report.matches_closed_form else EXIT_INTERNAL
