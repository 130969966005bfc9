"""
Check Suite Tests
"""

import pytest

from ribbon_invariants.errors import InternalCheckError
from ribbon_invariants.services.checks import (
    KNOT_WORDS,
    MODULE_BATTERY,
    SUITES,
    TRIPLE_BATTERY,
    CheckCase,
    build_cases,
    run_case,
    run_cases,
)
from tests.conftest import A1, A2


# ==========================================
# CASE CONSTRUCTION
# ==========================================


def test_default_batteries():
    """Test suites without weights fall back to their batteries"""
    assert len(build_cases("relations")) == len(MODULE_BATTERY)
    assert len(build_cases("zigzag")) == 2 * len(MODULE_BATTERY)
    assert len(build_cases("yangbaxter")) == len(TRIPLE_BATTERY)
    assert len(build_cases("reidemeister", samples=3)) == 3 * len(KNOT_WORDS)


def test_explicit_weights():
    """Test an algebra with weights restricts the suite"""
    cases = build_cases("relations", A2, [(1, 0), (0, 1)])

    assert [case.name for case in cases] == ["A2 [1,0]", "A2 [0,1]"]
    assert all(case.suite == "relations" for case in cases)


def test_zigzag_case_names_include_choice():
    """Test zig-zag cases are split by ribbon choice"""
    names = [case.name for case in build_cases("zigzag", A1, [(2,)])]
    assert names == ["A1 [2] st", "A1 [2] standard"]


def test_yangbaxter_needs_three_weights():
    """Test the braid relation needs a triple"""
    with pytest.raises(ValueError):
        build_cases("yangbaxter", A1, [(1,), (1,)])
    (case,) = build_cases("yangbaxter", A1, [(1,), (2,), (1,)])
    assert case.name == "A1 [1] [2] [1]"


def test_unknown_suite():
    """Test suite names are validated"""
    with pytest.raises(ValueError, match="unknown suite"):
        build_cases("everything")


def test_reidemeister_cases_are_reproducible():
    """Test the seed fixes the random moves"""
    first = [case.name for case in build_cases("reidemeister", A1, [(1,)], samples=4, seed=7)]
    second = [case.name for case in build_cases("reidemeister", A1, [(1,)], samples=4, seed=7)]
    assert first == second


def test_reidemeister_includes_loop_passes():
    """Test random moves slide strands across loops and those cases pass"""
    cases = build_cases("reidemeister", A1, [(1,)], samples=20, seed=3)
    loops = [case for case in cases if "loop pass" in case.name]

    assert loops
    for case in loops[:3]:
        assert run_case(case).passed


# ==========================================
# EXECUTION
# ==========================================


def test_run_case_pass_and_fail():
    """Test failures become detail text"""
    passing = run_case(CheckCase("relations", "ok", lambda: []))
    failing = run_case(CheckCase("relations", "bad", lambda: ["E1", "F1"]))

    assert passing.passed and passing.detail == ""
    assert not failing.passed
    assert failing.detail == "E1; F1"


def test_run_case_catches_internal_errors():
    """Test a raised self-check failure counts as a failed case"""

    def broken() -> list[str]:
        raise InternalCheckError("zig-zag did not close")

    result = run_case(CheckCase("zigzag", "broken", broken))
    assert not result.passed
    assert result.detail == "zig-zag did not close"


def test_run_cases_keeps_order_on_pool():
    """Test parallel results come back in case order"""
    cases = [
        CheckCase("relations", str(n), lambda n=n: [] if n % 2 else [str(n)]) for n in range(6)
    ]
    results = run_cases(cases, jobs=3)

    assert [r.case for r in results] == [str(n) for n in range(6)]
    assert [r.passed for r in results] == [False, True] * 3


def test_run_cases_rejects_zero_jobs():
    """Test job counts below one"""
    with pytest.raises(ValueError):
        run_cases([], jobs=0)


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_on_a1(suite):
    """Test every suite passes on a small A1 input"""
    weights = [(1,), (1,), (1,)] if suite == "yangbaxter" else [(1,)]
    results = run_cases(build_cases(suite, A1, weights, samples=3, seed=1), jobs=2)

    assert results
    assert all(r.passed for r in results), [r.detail for r in results if not r.passed]
