"""
Shared helpers for command handlers
"""

import argparse
import json
from collections.abc import Sequence
from pathlib import Path

from pydantic import BaseModel

from ..domain.models import LieType, RibbonChoice, Weight, parse_weight
from ..settings.config import Config, OutputFormat


def add_algebra_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algebra", help="Lie type such as A1, B2, G2")


def add_ribbon_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ribbon", choices=[c.value for c in RibbonChoice])


def lie_type_of(config: Config) -> LieType:
    """Parse the configured algebra; raises ValueError before any computation"""
    return LieType.parse(config.algebra)


def read_text(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def parse_weight_list(text: str) -> list[Weight]:
    """'1;1;1' or '1,0;0,1' into weights"""
    return [parse_weight(part) for part in text.split(";") if part.strip()]


def emit(config: Config, text: str, payload: BaseModel | Sequence[BaseModel]) -> None:
    """Print the text rendering or the JSON document, never both"""
    if config.output is OutputFormat.JSON:
        if isinstance(payload, BaseModel):
            print(payload.model_dump_json(indent=2))
        else:
            print(json.dumps([item.model_dump(mode="json") for item in payload], indent=2))
    else:
        print(text)
