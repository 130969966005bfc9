"""
Quantum Group Layer - Cartan data, modules, braiding and duality blocks
"""

from .braiding import (
    BraidOp,
    TensorSpace,
    braiding,
    braiding_inverse,
    check_braiding_intertwines,
    check_yang_baxter,
    isotypic_scalars,
    theta_on,
    weight_operator,
)
from .cartan import CartanData, cartan_data, parse_algebra
from .conventions import CONVENTION_LEDGER, CONVENTION_LEDGER_HASH
from .repn import (
    DualRepn,
    ModuleKey,
    Repn,
    WeightModule,
    build_irrep,
    check_relations,
    dual_repn,
    extremal_vector,
    quantum_character,
)
from .rigidity import CupCapMaps, build_cupcap, cupcap_for, ribbon_scalar

__all__ = [
    # Cartan data
    "CartanData",
    "cartan_data",
    "parse_algebra",
    # Modules
    "DualRepn",
    "ModuleKey",
    "Repn",
    "WeightModule",
    "build_irrep",
    "check_relations",
    "dual_repn",
    "extremal_vector",
    "quantum_character",
    # Braiding
    "BraidOp",
    "TensorSpace",
    "braiding",
    "braiding_inverse",
    "check_braiding_intertwines",
    "check_yang_baxter",
    "isotypic_scalars",
    "theta_on",
    "weight_operator",
    # Duality
    "CupCapMaps",
    "build_cupcap",
    "cupcap_for",
    "ribbon_scalar",
    # Conventions
    "CONVENTION_LEDGER",
    "CONVENTION_LEDGER_HASH",
]
