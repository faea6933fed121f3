# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""repro-paper: rerun the rescue-robot example and check the published tables."""

from __future__ import annotations

import argparse
from pathlib import Path

from hurwicz_profile.commands.common import (
    add_run_options,
    load_tree,
    subcommand_options,
    write_output,
)
from hurwicz_profile.config import RunConfig
from hurwicz_profile.documents import serialize_tree
from hurwicz_profile.model import paper_fixture
from hurwicz_profile.repro import run_repro_paper

EXIT_MISMATCH = 2

EPILOG = """
examples:
  Full reproduction:
    hurwicz-profile repro-paper

  Coarser grid:
    hurwicz-profile repro-paper --step 1/5

  Write the example tree as a starting point for your own:
    hurwicz-profile repro-paper --dump-tree tree.json

exit codes:
  0  every check passed
  1  input, parse or validation error
  2  at least one artifact differs from the published tables
"""


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the ``repro-paper`` subcommand.

    Args:
        subparsers: Subparser collection of the top-level parser
    """
    parser = subparsers.add_parser(
        "repro-paper",
        help="Reproduce the worked example and compare with the published tables",
        description="Normalize the example tree, sweep λ, compute exact regions "
        "and estimate λ from the fifteen published observations; print every "
        "artifact and list each cell that differs.",
        epilog=EPILOG,
        **subcommand_options(),
    )
    parser.add_argument(
        "--tree",
        type=Path,
        help="Use this tree document instead of the built-in example",
        metavar="FILE",
    )
    parser.add_argument(
        "--dump-tree",
        type=Path,
        help="Also write the built-in example tree as JSON to this file",
        metavar="FILE",
    )
    add_run_options(parser, step=True)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    """Run the reproduction and print its report.

    Returns:
        0 when every check passes, 2 otherwise
    """
    if args.dump_tree is not None:
        write_output(args.dump_tree, serialize_tree(paper_fixture()), "example tree")
    tree = load_tree(args.tree) if args.tree is not None else None
    result = run_repro_paper(
        step=config.grid_step,
        tree=tree,
        precision=config.precision,
        cap=config.strategy_cap,
        tie_break=config.tie_break,
    )
    write_output(None, result.report, "report")
    return 0 if result.ok else EXIT_MISMATCH
