# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""sweep: Hurwicz criterion values on a λ grid."""

from __future__ import annotations

import argparse

from hurwicz_profile.commands.common import (
    add_matrix_source,
    add_run_options,
    matrix_from_args,
    subcommand_options,
    write_output,
)
from hurwicz_profile.config import RunConfig
from hurwicz_profile.engine import sweep
from hurwicz_profile.tables import render_sweep

EPILOG = """
examples:
  Sweep at the default step of 0.1:
    hurwicz-profile sweep --tree tree.json

  Finer grid on a bare matrix:
    hurwicz-profile sweep --matrix matrix.csv --step 1/20
"""


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Add ``sweep`` to the top-level subparsers."""
    parser = subparsers.add_parser(
        "sweep",
        help="Evaluate every strategy over a λ grid",
        description="Print L(h, λ) for every strategy and grid point, followed by "
        "the best value L*(λ) and the selected strategy f*(λ).",
        epilog=EPILOG,
        **subcommand_options(),
    )
    add_matrix_source(parser)
    add_run_options(parser, step=True)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    """Print criterion values on the configured grid, then L* and f*."""
    matrix = matrix_from_args(args, config)
    table = sweep(matrix, config.grid_step)
    write_output(None, render_sweep(table, config.precision), "sweep")
    return 0
