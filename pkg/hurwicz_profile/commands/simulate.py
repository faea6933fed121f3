# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""simulate: generate an observation log."""

from __future__ import annotations

import argparse
from pathlib import Path

from hurwicz_profile.commands.common import (
    add_run_options,
    load_tree,
    rational_argument,
    subcommand_options,
    write_output,
)
from hurwicz_profile.config import RunConfig
from hurwicz_profile.documents import serialize_log
from hurwicz_profile.engine import risk_parameter
from hurwicz_profile.simulator import Behavior, parse_strategy, simulate

EPILOG = """
examples:
  Decision taker with λ = 0.7, 200 records:
    hurwicz-profile simulate --tree tree.json --lambda 7/10 --n 200 --seed 1

  Explicit strategy, saved for estimation:
    hurwicz-profile simulate --tree tree.json --strategy 010 --n 500 --seed 42 --out log.csv
"""


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Add ``simulate`` to the top-level subparsers."""
    parser = subparsers.add_parser(
        "simulate",
        help="Simulate a decision taker and write an observation log",
        description="Draw nature states from the tree's probabilities, apply the "
        "decision taker's strategy and log every episode as CSV. The same seed "
        "always gives the same log.",
        epilog=EPILOG,
        **subcommand_options(),
    )
    parser.add_argument(
        "--tree",
        type=Path,
        required=True,
        help="Decision tree document with p1 and p2",
        metavar="FILE",
    )
    behavior = parser.add_mutually_exclusive_group(required=True)
    behavior.add_argument(
        "--lambda",
        dest="lam",
        help="Pessimism parameter in [0, 1]; the λ-optimal strategy is followed",
        metavar="R",
    )
    behavior.add_argument(
        "--strategy",
        help="Explicit strategy as alternative labels in decision-state order (e.g. 010)",
        metavar="S",
    )
    parser.add_argument(
        "--n",
        type=int,
        required=True,
        help="Number of records",
        metavar="N",
    )
    parser.add_argument(
        "--seed",
        type=int,
        required=True,
        help="Unsigned seed of the random stream",
        metavar="U",
    )
    parser.add_argument(
        "--out",
        type=Path,
        help="Write the log to this file (default: stdout)",
        metavar="FILE",
    )
    add_run_options(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    """Write a seeded log for ``--lambda`` or ``--strategy``.

    Returns:
        0 on success
    """
    tree = load_tree(args.tree)
    behavior: Behavior
    if args.lam is not None:
        behavior = risk_parameter(rational_argument("--lambda", args.lam))
    else:
        behavior = parse_strategy(tree, args.strategy)
    log = simulate(tree, behavior, args.n, args.seed, config.strategy_cap)
    write_output(args.out, serialize_log(log, tree), "observation log")
    return 0
