# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""hurwicz-profile: Hurwicz-criterion analysis of two-stage decision trees."""

from __future__ import annotations

import os
import sys
from typing import NoReturn

import configargparse

from hurwicz_profile import __version__
from hurwicz_profile.commands import (
    estimate,
    normalize,
    regions,
    repro_paper,
    simulate,
    sweep,
)
from hurwicz_profile.commands.common import configure_logging
from hurwicz_profile.config import ConfigSchema, config_from_args
from hurwicz_profile.errors import HurwiczError, handle_unexpected_error

EXIT_INPUT_ERROR = 1


def _environment_help() -> str:
    lines = ["environment:"]
    for option in ConfigSchema.get_schema().values():
        if option["env"]:
            lines.append(
                f"  {option['env']:<21} {option['description']} (default: {option['default']})"
            )
    lines.append(f"  {'HURWICZ_DEBUG=1':<21} Show tracebacks for unexpected errors")
    return "\n".join(lines) + "\n"


class ArgumentParser(configargparse.ArgumentParser):
    """Usage errors are input errors: exit 1, leaving 2 for failed checks."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def create_parser() -> configargparse.ArgumentParser:
    """Create the argument parser with one subparser per command.

    Returns:
        Configured argument parser
    """
    epilog = """
examples:
  Reproduce the worked example:
    hurwicz-profile repro-paper

  Normal form, sweep and regions of your own tree:
    hurwicz-profile normalize --tree tree.json
    hurwicz-profile sweep --tree tree.json --step 1/20
    hurwicz-profile regions --tree tree.json

  Closed loop: simulate a cautious operator, then recover λ:
    hurwicz-profile simulate --tree tree.json --lambda 7/10 --n 200 --seed 1 --out log.csv
    hurwicz-profile estimate --tree tree.json --log log.csv --exact

"""
    epilog += _environment_help()

    parser = ArgumentParser(
        prog="hurwicz-profile",
        description="Estimate a decision taker's pessimism parameter λ under the "
        "Hurwicz criterion.\n\n"
        "Normalizes chance → decision → chance trees into payoff matrices, "
        "sweeps and partitions λ ∈ [0, 1] exactly, simulates decision takers and "
        "inverts observed choices back into λ.",
        formatter_class=configargparse.RawDescriptionHelpFormatter,
        epilog=epilog,
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )

    subparsers = parser.add_subparsers(
        dest="command",
        help="Analysis subcommands",
        metavar="COMMAND",
    )
    for command in (normalize, sweep, regions, simulate, estimate, repro_paper):
        command.add_parser(subparsers)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Main entry point for hurwicz-profile.

    Args:
        argv: Command-line arguments (default: sys.argv[1:])

    Returns:
        Exit code (0 = success, 1 = input error, 2 = failed check)
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_INPUT_ERROR

    debug = os.getenv("HURWICZ_DEBUG") == "1"
    configure_logging(args.verbose)

    try:
        config = config_from_args(args)
        return int(args.handler(args, config))

    except HurwiczError as e:
        e.print_error()
        return EXIT_INPUT_ERROR

    except Exception as e:
        handle_unexpected_error(e, debug=debug)


if __name__ == "__main__":
    sys.exit(main())
