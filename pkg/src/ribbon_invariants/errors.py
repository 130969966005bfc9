"""
Error Types - Failures surfaced by the engine and the command line

Parse and validation errors carry a location so the CLI can report it.
Internal check failures mean a convention or construction bug, never bad input.
"""


class RibbonInvariantsError(Exception):
    """Base class for all engine errors"""


class TangleParseError(RibbonInvariantsError, ValueError):
    """Syntax error in a tangle file, located by 1-based line number"""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class TangleValidationError(RibbonInvariantsError, ValueError):
    """Boundary propagation failure, located by 0-based slice index"""

    def __init__(self, slice_index: int, reason: str):
        self.slice_index = slice_index
        self.reason = reason
        super().__init__(f"slice {slice_index}: {reason}")


class InternalCheckError(RibbonInvariantsError, RuntimeError):
    """A self-check failed (relations, zig-zag, quasi-R-matrix residual)"""


class IntegralityError(InternalCheckError):
    """A value expected in Z[q^(1/D), q^(-1/D)] has a surviving denominator"""
