"""
Main entry point for the ribbon-invariants command line.

Run with:
    python -m ribbon_invariants invariant --tangle unknot.tangle
"""

import sys

from .app import app


def main() -> None:
    """Run one command; results go to stdout, logs to stderr."""
    sys.exit(app.run(sys.argv[1:]))


if __name__ == "__main__":
    main()
