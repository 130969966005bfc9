"""
Check Commands

Run a property suite and print PASS/FAIL per case. Any failure exits 3.
"""

import argparse

from ..app import EXIT_INTERNAL, EXIT_OK, app
from ..dependencies import get_service
from ..domain.models import parse_weight
from ..services.checks import SUITES
from ..settings.config import Config
from .common import add_algebra_option, emit, lie_type_of, parse_weight_list


def _configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES)}")
    add_algebra_option(parser)
    parser.add_argument("--weight", action="append", default=[], help="repeatable")
    parser.add_argument("--weights", help="semicolon separated, e.g. '1;1;1'")
    parser.add_argument("--jobs", type=int, default=1, help="worker threads")
    parser.add_argument("--samples", type=int, default=10, help="moves per knot (reidemeister)")
    parser.add_argument("--seed", type=int, default=0)


@app.command("check", "run a property suite", _configure)
async def check(args: argparse.Namespace, config: Config) -> int:
    weights = [parse_weight(w) for w in args.weight]
    if args.weights:
        weights += parse_weight_list(args.weights)
    # Without an explicit algebra and weights the suite runs its default battery
    lie_type = lie_type_of(config) if args.algebra or weights else None
    service = await get_service()
    results = await service.run_checks(
        args.suite, lie_type, weights, jobs=args.jobs, samples=args.samples, seed=args.seed
    )
    lines = []
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'} {r.suite} {r.case}"
        lines.append(f"{line}: {r.detail}" if r.detail else line)
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} passed")
    emit(config, "\n".join(lines), results)
    return EXIT_OK if passed == len(results) else EXIT_INTERNAL
