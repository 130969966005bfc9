"""
Homological Algebra - Graded local algebras, resolutions and Tor
"""

from .graded import (
    GradedAlgebra,
    GradedModule,
    free_module,
    quotient_module,
    residue_field,
    truncated_polynomial_algebra,
)
from .resolution import Resolution, TorTable, minimal_resolution, tor_bigraded
from .unknot import closed_form_series, euler_specialization, unknot_series

__all__ = [
    "GradedAlgebra",
    "GradedModule",
    "Resolution",
    "TorTable",
    "closed_form_series",
    "euler_specialization",
    "free_module",
    "minimal_resolution",
    "quotient_module",
    "residue_field",
    "tor_bigraded",
    "truncated_polynomial_algebra",
    "unknot_series",
]
