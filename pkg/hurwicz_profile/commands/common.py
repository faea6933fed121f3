# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Helpers shared by the subcommands: options, file I/O and document loading."""

from __future__ import annotations

import argparse
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any

import configargparse
from rich.console import Console
from rich.logging import RichHandler

from hurwicz_profile.config import DEFAULT_CONFIG_FILES, RunConfig
from hurwicz_profile.documents import parse_log, parse_matrix, parse_tree
from hurwicz_profile.errors import (
    DocumentParseError,
    FilePermissionError,
    InputFileNotFoundError,
    InvalidArgumentError,
)
from hurwicz_profile.model import DecisionTree, parse_rational
from hurwicz_profile.normalizer import PayoffMatrix, normalize
from hurwicz_profile.simulator import ObservationLog

console = Console()
console_err = Console(stderr=True)


def subcommand_options() -> dict[str, Any]:
    """Keyword arguments for ``add_parser`` so every subcommand reads config files."""
    return {
        "default_config_files": DEFAULT_CONFIG_FILES,
        "ignore_unknown_config_file_keys": True,
        "formatter_class": configargparse.RawDescriptionHelpFormatter,
    }


def add_run_options(parser: configargparse.ArgumentParser, step: bool = False) -> None:
    """Options every subcommand accepts; ``step`` adds the λ grid step."""
    parser.add_argument(
        "-c",
        "--config",
        is_config_file=True,
        help="Configuration file path (default: .hurwicz.conf, ~/.hurwicz/config)",
    )
    if step:
        parser.add_argument(
            "--step",
            env_var="HURWICZ_GRID_STEP",
            help="λ grid step in (0, 1], as a decimal or p/q (default: 1/10). "
            "Can also be set via HURWICZ_GRID_STEP",
            metavar="R",
        )
    parser.add_argument(
        "--strategy-cap",
        type=int,
        env_var="HURWICZ_STRATEGY_CAP",
        help="Largest pure-strategy count to enumerate (default: 2**20)",
        metavar="N",
    )
    parser.add_argument(
        "--precision",
        type=int,
        env_var="HURWICZ_PRECISION",
        help="Decimal places for displayed values (default: 1)",
        metavar="N",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Show debug logging on stderr",
    )


def configure_logging(verbose: bool) -> None:
    """Send package logs to stderr through rich, WARNING by default."""
    logger = logging.getLogger("hurwicz_profile")
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)
    handler = RichHandler(console=console_err, show_time=False, show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def rational_argument(name: str, text: str) -> Fraction:
    """Parse a rational command-line value, reporting the option on failure."""
    try:
        return parse_rational(text)
    except ValueError as e:
        raise InvalidArgumentError(name, str(e), ["7/10", "0.7", "1"]) from e


def read_text(path: Path, file_type: str) -> str:
    """Read a UTF-8 input document.

    Raises:
        InputFileNotFoundError: If the path does not exist
        FilePermissionError: If it cannot be read
        DocumentParseError: If it is not valid UTF-8
    """
    if not path.exists():
        raise InputFileNotFoundError(path, file_type=file_type)
    try:
        return path.read_text(encoding="utf-8")
    except PermissionError as e:
        raise FilePermissionError(path, operation="read") from e
    except UnicodeDecodeError as e:
        raise DocumentParseError(
            str(path), f"not valid UTF-8: byte {e.object[e.start]:#04x} at offset {e.start}"
        ) from e


def write_output(path: Path | None, text: str, what: str) -> None:
    """Write to ``path``, or to stdout when no path is given."""
    if path is None:
        print(text, end="")
        return
    try:
        path.write_text(text, encoding="utf-8")
    except PermissionError as e:
        raise FilePermissionError(path, operation="write") from e
    console_err.print(f"[green]✓[/green] Wrote {what} to {path}")


def load_tree(path: Path) -> DecisionTree:
    """Read and parse a JSON tree document.

    Raises:
        InputFileNotFoundError: If the path does not exist
        DocumentParseError: If the document is malformed
        TreeValidationError: If the parsed tree is inconsistent
    """
    return parse_tree(read_text(path, "tree document"), source=str(path))


def load_matrix(path: Path) -> PayoffMatrix:
    """Read and parse a CSV payoff matrix."""
    return parse_matrix(read_text(path, "matrix file"), source=str(path))


def load_log(path: Path, tree: DecisionTree | None = None) -> ObservationLog:
    """Read and parse a CSV observation log.

    Args:
        path: Log file
        tree: When given, decisions are read as labels and payments are checked
    """
    return parse_log(read_text(path, "observation log"), tree, source=str(path))


def add_matrix_source(parser: configargparse.ArgumentParser) -> None:
    """``--tree F | --matrix F``, exactly one required."""
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--tree",
        type=Path,
        help="Decision tree document (JSON); it is normalized first",
        metavar="FILE",
    )
    source.add_argument(
        "--matrix",
        type=Path,
        help="Payoff matrix (CSV) to use directly",
        metavar="FILE",
    )


def matrix_from_args(args: argparse.Namespace, config: RunConfig) -> PayoffMatrix:
    """The matrix named by ``--matrix``, or the normalized ``--tree``."""
    if args.tree is not None:
        return normalize(load_tree(args.tree), config.strategy_cap)
    return load_matrix(args.matrix)
