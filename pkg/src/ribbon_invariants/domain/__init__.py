"""
Domain Layer - Value types, persistence protocol and the tangle format

Models and the store protocol are re-exported here; the parser, validator
and rewrites live in domain.tangle.
"""

from .models import (
    CheckResult,
    Component,
    ComponentData,
    ComponentSummary,
    Direction,
    InvarianceReport,
    HomologyReport,
    InvariantReport,
    LieType,
    ModuleRef,
    RatioReport,
    RepReport,
    RibbonChoice,
    Slice,
    SliceKind,
    StoredBlock,
    StrandState,
    Tangle,
    Weight,
    format_weight,
    parse_weight,
)
from .protocols import BlockStore

__all__ = [
    # Algebra and weights
    "LieType",
    "Weight",
    "format_weight",
    "parse_weight",
    # Tangles
    "Direction",
    "Slice",
    "SliceKind",
    "StrandState",
    "Tangle",
    "Component",
    "ComponentData",
    "RibbonChoice",
    # Reports
    "CheckResult",
    "ComponentSummary",
    "HomologyReport",
    "InvarianceReport",
    "InvariantReport",
    "RatioReport",
    "RepReport",
    # Persistence
    "BlockStore",
    "ModuleRef",
    "StoredBlock",
]
