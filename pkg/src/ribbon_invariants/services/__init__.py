"""
Services Layer - Evaluation, property suites and command-level operations
"""

from .checks import SUITES, CheckCase, build_cases, run_cases
from .evaluator import (
    EvalState,
    evaluate,
    evaluate_closed,
    invariance_suite,
    normalized_invariant,
    predicted_ratio,
    st_standard_ratio,
    unframed_invariant,
)
from .invariant_service import InvariantService

__all__ = [
    # Evaluation
    "EvalState",
    "evaluate",
    "evaluate_closed",
    "invariance_suite",
    "normalized_invariant",
    "predicted_ratio",
    "st_standard_ratio",
    "unframed_invariant",
    # Checks
    "SUITES",
    "CheckCase",
    "build_cases",
    "run_cases",
    # Service
    "InvariantService",
]
