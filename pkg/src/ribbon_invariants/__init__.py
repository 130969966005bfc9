"""
Ribbon Invariants

Exact Reshetikhin-Turaev invariants of labelled oriented framed tangles for
simple Lie algebras, with both the standard and the Snyder-Tingley ribbon
element, property suites for the underlying quantum group data, and the
graded Tor computation behind the colour-2 sl2 unknot homology.
"""

from .core import get_block_store
from .domain.tangle import braid_closure, parse_tangle, trace_components
from .services import (
    InvariantService,
    evaluate,
    evaluate_closed,
    invariance_suite,
    st_standard_ratio,
)
from .settings import Config, OutputFormat

__version__ = "0.1.0"

__all__ = [
    # Version
    "__version__",
    # Tangles
    "braid_closure",
    "parse_tangle",
    "trace_components",
    # Evaluation
    "evaluate",
    "evaluate_closed",
    "invariance_suite",
    "st_standard_ratio",
    # Services
    "InvariantService",
    # Core/Factories
    "get_block_store",
    # Settings
    "Config",
    "OutputFormat",
]
