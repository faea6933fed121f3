# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""normalize: tree document → payoff matrix."""

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
from hurwicz_profile.documents import serialize_matrix
from hurwicz_profile.normalizer import normalize
from hurwicz_profile.tables import render_matrix

EPILOG = """
examples:
  Show the payoff matrix of a tree:
    hurwicz-profile normalize --tree tree.json

  Save it as CSV for later sweeps:
    hurwicz-profile normalize --tree tree.json --out matrix.csv
"""


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the ``normalize`` subcommand.

    Args:
        subparsers: Subparser collection of the top-level parser
    """
    parser = subparsers.add_parser(
        "normalize",
        help="Build the normalized payoff matrix of a decision tree",
        description="Enumerate pure strategies and compound nature states and "
        "print the payoff matrix. With --out the raw CSV (exact p/q cells) is "
        "written instead.",
        epilog=EPILOG,
        **subcommand_options(),
    )
    parser.add_argument(
        "--tree",
        type=Path,
        required=True,
        help="Decision tree document (JSON)",
        metavar="FILE",
    )
    parser.add_argument(
        "--out",
        type=Path,
        help="Write the matrix as CSV to this file",
        metavar="FILE",
    )
    add_run_options(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    """Print the payoff matrix of ``--tree``, or write it as CSV to ``--out``.

    Returns:
        0 on success
    """
    matrix = normalize(load_tree(args.tree), config.strategy_cap)
    if args.out is not None:
        write_output(args.out, serialize_matrix(matrix), "matrix")
    else:
        write_output(None, render_matrix(matrix, config.precision), "matrix")
    return 0
