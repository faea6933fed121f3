# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""estimate: λ of the decision taker behind an observation log."""

from __future__ import annotations

import argparse
from pathlib import Path

from hurwicz_profile.commands.common import (
    add_run_options,
    load_log,
    load_tree,
    subcommand_options,
    write_output,
)
from hurwicz_profile.config import RunConfig
from hurwicz_profile.estimator import estimate_lambda
from hurwicz_profile.normalizer import normalize
from hurwicz_profile.tables import render_profile, render_profile_json

EXIT_NOT_RATIONALIZABLE = 2

EPILOG = """
examples:
  Grid estimate at step 0.1:
    hurwicz-profile estimate --tree tree.json --log log.csv

  Exact interval, failing when no λ explains the log:
    hurwicz-profile estimate --tree tree.json --log log.csv --exact --strict

exit codes:
  0  estimate produced
  1  input, parse or validation error
  2  observed strategy not rationalizable (with --strict)
"""


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the ``estimate`` subcommand.

    Args:
        subparsers: Subparser collection of the top-level parser
    """
    parser = subparsers.add_parser(
        "estimate",
        help="Estimate the pessimism parameter from an observation log",
        description="Infer the decision taker's strategy by majority vote per "
        "decision state, then report the λ values at which the Hurwicz criterion "
        "selects it. Grid mode (default) reports grid points; --exact reports "
        "rational intervals. --step is ignored with --exact.",
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
        "--log",
        type=Path,
        required=True,
        help="Observation log (CSV); payments are checked against the tree",
        metavar="FILE",
    )
    parser.add_argument(
        "--exact",
        action="store_true",
        help="Report exact λ intervals instead of grid points",
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        help="Exit 2 when no λ selects the observed strategy",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        help="Output the profile in JSON format",
    )
    add_run_options(parser, step=True)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    """Infer the strategy in ``--log`` and report its λ set.

    Returns:
        0, or 2 under ``--strict`` when no λ explains the log
    """
    tree = load_tree(args.tree)
    log = load_log(args.log, tree)
    profile = estimate_lambda(
        log,
        tree,
        mode="exact" if args.exact else "grid",
        step=config.grid_step,
        cap=config.strategy_cap,
    )
    if args.json:
        write_output(None, render_profile_json(profile, tree), "profile")
    else:
        matrix = normalize(tree, config.strategy_cap)
        write_output(None, render_profile(profile, tree, matrix, config.precision), "profile")

    if args.strict and profile.status == "non-rationalizable":
        return EXIT_NOT_RATIONALIZABLE
    return 0
