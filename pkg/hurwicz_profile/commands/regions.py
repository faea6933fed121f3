# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""regions: exact λ intervals of each selected strategy."""

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
from hurwicz_profile.engine import strategy_regions
from hurwicz_profile.tables import render_regions


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Add ``regions`` to the top-level subparsers."""
    parser = subparsers.add_parser(
        "regions",
        help="Partition [0, 1] into exact λ regions per strategy",
        description="Compute the upper envelope of the criterion lines and print "
        "the exact rational breakpoints with the strategy chosen between them.",
        **subcommand_options(),
    )
    add_matrix_source(parser)
    add_run_options(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    """Print the exact λ regions, one selected strategy per line."""
    matrix = matrix_from_args(args, config)
    regions = strategy_regions(matrix)
    write_output(
        None, render_regions(regions, matrix.row_labels, config.precision), "regions"
    )
    return 0
