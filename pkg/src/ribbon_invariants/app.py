"""
Command Application - Argument parsing, dispatch and exit codes

Commands live in the commands/ package and register themselves on the
shared app object through the command decorator.
"""

import argparse
import asyncio
import dataclasses
import logging
import sys
from collections.abc import Awaitable, Callable, Sequence
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .dependencies import get_config, set_config, shutdown_service
from .domain.models import RibbonChoice
from .errors import InternalCheckError, TangleParseError, TangleValidationError
from .settings.config import Config, OutputFormat

logger = logging.getLogger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_INTERNAL = 3

Handler = Callable[[argparse.Namespace, Config], Awaitable[int]]
Configure = Callable[[argparse.ArgumentParser], None]


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    configure: Configure
    handler: Handler


class CommandApp:
    """Registry of subcommands sharing one configuration and service"""

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description
        self._commands: dict[str, Command] = {}

    def command(self, name: str, help: str, configure: Configure) -> Callable[[Handler], Handler]:
        """Register an async handler under a subcommand name"""

        def register(handler: Handler) -> Handler:
            if name in self._commands:
                raise ValueError(f"command '{name}' registered twice")
            self._commands[name] = Command(name, help, configure, handler)
            return handler

        return register

    @property
    def commands(self) -> list[str]:
        return list(self._commands)

    def build_parser(self) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--output", choices=[f.value for f in OutputFormat])
        common.add_argument("--cache-dir", type=Path, help="persist braid blocks here")
        common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")

        parser = argparse.ArgumentParser(prog=self.name, description=self.description)
        parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        subparsers = parser.add_subparsers(dest="command", required=True)
        for command in self._commands.values():
            sub = subparsers.add_parser(command.name, help=command.help, parents=[common])
            command.configure(sub)
        return parser

    @staticmethod
    def resolve_config(args: argparse.Namespace, base: Config) -> Config:
        """Command-line flags override environment values"""
        overrides: dict[str, object] = {}
        if getattr(args, "output", None):
            overrides["output"] = OutputFormat(args.output)
        if getattr(args, "cache_dir", None):
            overrides["cache_dir"] = args.cache_dir
        if getattr(args, "log_level", None):
            overrides["log_level"] = args.log_level.upper()
        if getattr(args, "algebra", None):
            overrides["algebra"] = args.algebra
        if getattr(args, "ribbon", None):
            overrides["ribbon"] = RibbonChoice(args.ribbon)
        return dataclasses.replace(base, **overrides)  # type: ignore[arg-type]

    async def _dispatch(self, command: Command, args: argparse.Namespace, config: Config) -> int:
        try:
            return await command.handler(args, config)
        finally:
            await shutdown_service()

    def run(self, argv: Sequence[str] | None = None) -> int:
        """Parse, configure logging, run the command and map errors to exit codes"""
        parser = self.build_parser()
        args = parser.parse_args(argv)
        try:
            config = self.resolve_config(args, get_config())
            logging.basicConfig(
                stream=sys.stderr,
                level=config.log_level,
                format="%(levelname)s %(name)s: %(message)s",
            )
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_VALIDATION
        set_config(config)
        command = self._commands[args.command]
        logger.info("running %s", command.name)
        try:
            return asyncio.run(self._dispatch(command, args, config))
        except TangleParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        except TangleValidationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_VALIDATION
        except InternalCheckError as exc:
            logger.debug("internal check failed", exc_info=True)
            print(f"internal check failed: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
        except (ValueError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_VALIDATION


# Initialize the shared app
app = CommandApp(
    name="ribbon-invariants",
    description="Exact quantum invariants of labelled ribbon tangles",
)

# Import and register commands (they register via decorators)
from .commands import (  # noqa: E402, F401
    check_commands,
    homology_commands,
    invariant_commands,
    rep_commands,
)
