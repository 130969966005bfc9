"""
Commands - Subcommands of the ribbon-invariants CLI

Each file in this directory defines one or more subcommands.
Commands are registered with the shared app when imported in app.py.
"""

# Import all command modules to register them with the app
from . import check_commands, homology_commands, invariant_commands, rep_commands  # noqa: F401

__all__ = ["check_commands", "homology_commands", "invariant_commands", "rep_commands"]
