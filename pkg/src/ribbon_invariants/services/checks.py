"""
Check Suites - Property batteries run from the command line

Each suite expands into named cases. A case returns the list of failures
it found; an empty list is a pass. Cases share the process-wide block
caches, so they can run on a thread pool.
"""

import logging
import random
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ..domain.models import CheckResult, LieType, RibbonChoice, Tangle, Weight, format_weight
from ..domain.tangle import (
    braid_closure,
    insert_free_loop,
    insert_loop_pass,
    insert_reidemeister_ii,
    insert_reidemeister_iii,
    insert_s_move,
    insert_twist_pair,
    strand_count,
)
from ..errors import RibbonInvariantsError
from ..quantum.braiding import check_braiding_intertwines, check_yang_baxter
from ..quantum.cartan import cartan_data
from ..quantum.repn import build_irrep, check_nondegenerate, check_relations, dual_repn
from ..quantum.rigidity import cupcap_for, zigzag_failures
from .evaluator import evaluate_closed

logger = logging.getLogger(__name__)

SUITES = ("relations", "yangbaxter", "zigzag", "reidemeister")

A1 = LieType(series="A", rank=1)
A2 = LieType(series="A", rank=2)
B2 = LieType(series="B", rank=2)

# Default batteries
MODULE_BATTERY: tuple[tuple[LieType, Weight], ...] = (
    (A1, (1,)),
    (A1, (2,)),
    (A1, (3,)),
    (A1, (4,)),
    (A2, (1, 0)),
    (A2, (0, 1)),
    (A2, (1, 1)),
    (B2, (1, 0)),
    (B2, (0, 1)),
)
Triple = tuple[Weight, Weight, Weight]

TRIPLE_BATTERY: tuple[tuple[LieType, Triple], ...] = (
    (A1, ((1,), (1,), (1,))),
    (A1, ((1,), (2,), (1,))),
    (A1, ((2,), (2,), (2,))),
    (A2, ((1, 0), (1, 0), (1, 0))),
)

# Braid words of the knots the Reidemeister regression perturbs
KNOT_WORDS: dict[str, tuple[int, list[int]]] = {
    "trefoil": (2, [1, 1, 1]),
    "figure8": (3, [1, -2, 1, -2]),
}


@dataclass(frozen=True)
class CheckCase:
    suite: str
    name: str
    run: Callable[[], list[str]]


# ==========================================
# Suite builders
# ==========================================


def relations_cases(modules: Sequence[tuple[LieType, Weight]]) -> list[CheckCase]:
    """Quantum group relations on V_lambda and its dual, plus a nondegenerate form"""

    def case(lie_type: LieType, weight: Weight) -> Callable[[], list[str]]:
        def run() -> list[str]:
            rep = build_irrep(cartan_data(lie_type), weight)
            failures = check_relations(rep) + check_nondegenerate(rep)
            failures += [f"dual: {name}" for name in check_relations(dual_repn(rep).module)]
            return failures

        return run

    return [
        CheckCase("relations", f"{lt.name} [{format_weight(w)}]", case(lt, w))
        for lt, w in modules
    ]


def yang_baxter_cases(
    triples: Sequence[tuple[LieType, Triple]],
) -> list[CheckCase]:
    def case(lie_type: LieType, labels: Triple) -> Callable[[], list[str]]:
        def run() -> list[str]:
            cd = cartan_data(lie_type)
            V, W, U = (build_irrep(cd, label) for label in labels)
            failures = [
                f"sigma does not commute with {g}" for g in check_braiding_intertwines(V, W)
            ]
            if not check_yang_baxter(V, W, U):
                failures.append("braid relation fails")
            return failures

        return run

    return [
        CheckCase(
            "yangbaxter",
            f"{lt.name} " + " ".join(f"[{format_weight(w)}]" for w in labels),
            case(lt, labels),
        )
        for lt, labels in triples
    ]


def zigzag_cases(modules: Sequence[tuple[LieType, Weight]]) -> list[CheckCase]:
    """Both snake identities on each side, for both ribbon choices"""

    def case(lie_type: LieType, weight: Weight, choice: RibbonChoice) -> Callable[[], list[str]]:
        def run() -> list[str]:
            return zigzag_failures(cupcap_for(cartan_data(lie_type), weight, choice))

        return run

    return [
        CheckCase(
            "zigzag", f"{lt.name} [{format_weight(w)}] {choice.value}", case(lt, w, choice)
        )
        for lt, w in modules
        for choice in RibbonChoice
    ]


def _random_move(
    tangle: Tangle, rng: random.Random, label: Weight
) -> tuple[str, Tangle, Tangle]:
    """
    One Reidemeister II/III, S-move, cancelling twist pair or loop pass at a
    random height, as (description, reference, moved). The reference is the
    tangle itself, or for a loop pass the tangle with a free loop.
    """
    while True:
        index = rng.randrange(len(tangle.slices) + 1)
        width = strand_count(tangle, index)
        moves = []
        if width >= 1:
            moves += ["s0", "s1", "twist", "loop"]
        if width >= 2:
            moves.append("ii")
        if width >= 3:
            moves.append("iii")
        if not moves:
            continue
        move = rng.choice(moves)
        match move:
            case "ii":
                position = rng.randrange(width - 1)
                moved = insert_reidemeister_ii(tangle, index, position)
                return f"RII at {index}:{position}", tangle, moved
            case "iii":
                position = rng.randrange(width - 2)
                moved = insert_reidemeister_iii(tangle, index, position)
                return f"RIII at {index}:{position}", tangle, moved
            case "twist":
                position = rng.randrange(width)
                moved = insert_twist_pair(tangle, index, position)
                return f"twist pair at {index}:{position}", tangle, moved
            case "loop":
                position = rng.randrange(width)
                positive = rng.random() < 0.5
                reference = insert_free_loop(tangle, index, position, label)
                moved = insert_loop_pass(tangle, index, position, label, positive)
                sign = "+" if positive else "-"
                return f"loop pass{sign} at {index}:{position}", reference, moved
            case _:
                position = rng.randrange(width)
                variant = int(move[1])
                moved = insert_s_move(tangle, index, position, variant)
                return f"S-move/{variant} at {index}:{position}", tangle, moved


def reidemeister_cases(
    lie_type: LieType, label: Weight, samples: int = 10, seed: int = 0
) -> list[CheckCase]:
    """Random local moves inserted into braid closures must not change either value"""
    rng = random.Random(seed)
    cases = []
    for knot, (strands, word) in KNOT_WORDS.items():
        base = braid_closure(lie_type, word, [label] * strands)
        for _ in range(samples):
            description, reference, moved = _random_move(base, rng, label)

            def run(reference: Tangle = reference, moved: Tangle = moved) -> list[str]:
                failures = []
                for choice in RibbonChoice:
                    before = evaluate_closed(reference, choice)
                    after = evaluate_closed(moved, choice)
                    if before != after:
                        failures.append(f"{choice.value}: {before} became {after}")
                return failures

            cases.append(CheckCase("reidemeister", f"{knot} {description}", run))
    return cases


def build_cases(
    suite: str,
    lie_type: LieType | None = None,
    weights: Sequence[Weight] = (),
    samples: int = 10,
    seed: int = 0,
) -> list[CheckCase]:
    """
    Cases of one suite. With an algebra and weights the suite runs on those
    alone; without, on its default battery.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite '{suite}', expected one of {', '.join(SUITES)}")
    if lie_type is None or not weights:
        match suite:
            case "relations":
                return relations_cases(MODULE_BATTERY)
            case "zigzag":
                return zigzag_cases(MODULE_BATTERY)
            case "yangbaxter":
                return yang_baxter_cases(TRIPLE_BATTERY)
            case _:
                return reidemeister_cases(lie_type or A1, (1,), samples, seed)
    modules = [(lie_type, weight) for weight in weights]
    match suite:
        case "relations":
            return relations_cases(modules)
        case "zigzag":
            return zigzag_cases(modules)
        case "yangbaxter":
            if len(weights) != 3:
                raise ValueError(f"yangbaxter needs three weights, got {len(weights)}")
            return yang_baxter_cases([(lie_type, (weights[0], weights[1], weights[2]))])
        case _:
            return reidemeister_cases(lie_type, weights[0], samples, seed)


# ==========================================
# Execution
# ==========================================


def run_case(case: CheckCase) -> CheckResult:
    """Run one case; internal check failures count as a failed case"""
    try:
        failures = case.run()
    except RibbonInvariantsError as exc:
        failures = [str(exc)]
    if failures:
        logger.info("%s %s: FAIL", case.suite, case.name)
    return CheckResult(
        suite=case.suite, case=case.name, passed=not failures, detail="; ".join(failures)
    )


def run_cases(cases: Sequence[CheckCase], jobs: int = 1) -> list[CheckResult]:
    """Results in case order; jobs > 1 runs them on a thread pool"""
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    if jobs == 1:
        return [run_case(case) for case in cases]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_case, cases))
