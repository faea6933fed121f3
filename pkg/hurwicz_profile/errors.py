# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""User-friendly error handling for hurwicz-profile.

This module provides structured error handling with:
- Clear, actionable error messages
- Error codes for programmatic handling
- Suggestions for fixing common problems
- Consistent formatting across all subcommands

Library functions raise these errors; the command-line layer turns them into
exit codes.
"""

from __future__ import annotations

import sys
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, NoReturn

from rich.console import Console

if TYPE_CHECKING:
    from hurwicz_profile.model import ValidationReport

console_err = Console(stderr=True)


class ErrorCode(Enum):
    """Error codes for programmatic error handling."""

    # File errors (1xx)
    FILE_NOT_FOUND = 101
    FILE_PERMISSION_DENIED = 102

    # Document errors (2xx)
    DOCUMENT_PARSE_ERROR = 201
    DOCUMENT_MISSING_PAYOFF = 202
    LOG_PAYMENT_MISMATCH = 203

    # Model errors (3xx)
    TREE_INVALID = 301
    PAYOFF_KEY_UNKNOWN = 302
    STRATEGY_INVALID = 303
    PROBABILITIES_MISSING = 304

    # Configuration errors (4xx)
    CONFIG_INVALID_VALUE = 403

    # Computation errors (5xx)
    STRATEGY_SPACE_TOO_LARGE = 501
    EMPTY_MATRIX = 502
    STEP_OUT_OF_RANGE = 503
    LAMBDA_OUT_OF_RANGE = 504

    # Estimation errors (6xx)
    OBSERVATION_UNKNOWN = 601

    # Generic errors (9xx)
    INVALID_ARGUMENT = 901
    UNEXPECTED_ERROR = 999


class HurwiczError(Exception):
    """Base exception for hurwicz-profile errors with user-friendly messaging."""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode,
        suggestions: list[str] | None = None,
        details: str | None = None,
    ):
        """Initialize error with user-friendly information.

        Args:
            message: Main error message (what went wrong)
            error_code: Error code for programmatic handling
            suggestions: List of actionable suggestions for fixing the error
            details: Additional technical details (optional)
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.suggestions = suggestions or []
        self.details = details

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} ({self.details})"
        return self.message

    def format_error(self) -> str:
        """Format error message for CLI display.

        Returns:
            Formatted error message with suggestions
        """
        lines = [f"[red]Error:[/red] {self.message}"]

        if self.details:
            lines.append(f"\n{self.details}")

        if self.suggestions:
            lines.append("\n[yellow]Possible solutions:[/yellow]")
            for i, suggestion in enumerate(self.suggestions, 1):
                lines.append(f"  {i}. {suggestion}")

        lines.append(f"\n[dim]Error code: {self.error_code.name}[/dim]")

        return "\n".join(lines)

    def print_error(self) -> None:
        """Print formatted error to stderr."""
        console_err.print(self.format_error(), highlight=False)

    def print_and_exit(self, exit_code: int = 1) -> NoReturn:
        """Print formatted error and exit.

        Args:
            exit_code: Exit code (default: 1)
        """
        self.print_error()
        sys.exit(exit_code)


# File errors


class InputFileNotFoundError(HurwiczError):
    """Input file not found error with suggestions."""

    def __init__(self, file_path: Path, file_type: str = "file"):
        """Initialize file not found error.

        Args:
            file_path: Path to missing file
            file_type: Type of file (for better messaging)
        """
        suggestions = [
            f"Check that the {file_type} path is correct",
            f"Verify the {file_type} exists at the specified location",
        ]

        if file_type == "tree document":
            suggestions.append(
                "Write the worked example as a starting point: "
                "hurwicz-profile repro-paper --dump-tree tree.json"
            )
        elif file_type == "observation log":
            suggestions.append(
                "Generate a log: hurwicz-profile simulate --tree F --lambda 7/10 "
                "--n 200 --seed 1 --out log.csv"
            )

        super().__init__(
            message=f"{file_type.capitalize()} not found",
            error_code=ErrorCode.FILE_NOT_FOUND,
            suggestions=suggestions,
            details=f"Path: {file_path}",
        )


class FilePermissionError(HurwiczError):
    """File permission denied error."""

    def __init__(self, file_path: Path, operation: str = "access"):
        """Initialize permission error.

        Args:
            file_path: Path to file
            operation: Operation that failed (read, write)
        """
        super().__init__(
            message=f"Permission denied: cannot {operation} file",
            error_code=ErrorCode.FILE_PERMISSION_DENIED,
            suggestions=[
                f"Check file permissions: ls -la {file_path}",
                f"Ensure you have {operation} access to the file",
            ],
            details=f"Path: {file_path}",
        )


# Document errors


class DocumentParseError(HurwiczError):
    """Malformed tree, matrix or log document."""

    def __init__(
        self,
        source: str,
        reason: str,
        line: int | None = None,
        field: str | None = None,
    ):
        """Initialize document parse error.

        Args:
            source: Document kind or path being parsed
            reason: What is wrong with it
            line: 1-based line number, when known
            field: Offending field or column, when known
        """
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field '{field}'")
        where = f" at {', '.join(location)}" if location else ""

        self.source = source
        self.line = line
        self.field = field

        super().__init__(
            message=f"Failed to parse {source}{where}",
            error_code=ErrorCode.DOCUMENT_PARSE_ERROR,
            suggestions=[
                "Check the document against the expected schema",
                "Rationals may be written as integers, decimals or 'p/q' strings",
            ],
            details=f"Reason: {reason}",
        )


class MissingPayoffError(HurwiczError):
    """A payoff cell required by the tree is absent from the document."""

    def __init__(self, first: str, alternative: str, second: str):
        self.cell = (first, alternative, second)
        super().__init__(
            message=f"Missing payoff for ({first}, {alternative}, {second})",
            error_code=ErrorCode.DOCUMENT_MISSING_PAYOFF,
            suggestions=[
                "Every decision state needs one payoff per alternative "
                "and stage-2 state",
                f"Add the value under payoff.{first}.{alternative}",
            ],
        )


class LogConsistencyError(HurwiczError):
    """A logged payment disagrees with the tree's path payoff."""

    def __init__(self, index: int, expected: Fraction, recorded: Fraction):
        self.index = index
        super().__init__(
            message=f"Observation {index} records payment {recorded}, "
            f"tree pays {expected}",
            error_code=ErrorCode.LOG_PAYMENT_MISMATCH,
            suggestions=[
                "Check that the log was produced from this tree",
                "Check the log for corrupted rows",
            ],
        )


# Model errors


class TreeValidationError(HurwiczError):
    """Decision tree violates one or more structural invariants."""

    def __init__(self, report: ValidationReport):
        self.report = report
        details = "\n".join(f"  - {v}" for v in report.violations)
        super().__init__(
            message=f"Decision tree is invalid ({len(report.violations)} violation(s))",
            error_code=ErrorCode.TREE_INVALID,
            suggestions=["Fix the listed fields and states in the tree document"],
            details=details,
        )


class PayoffKeyError(HurwiczError, KeyError):
    """Lookup of a payoff with an unknown state or alternative."""

    def __init__(self, component: str, value: object):
        self.component = component
        self.value = value
        super().__init__(
            message=f"Unknown {component}: {value!r}",
            error_code=ErrorCode.PAYOFF_KEY_UNKNOWN,
            suggestions=[f"Use a {component} declared in the tree"],
        )


class InvalidStrategyError(HurwiczError):
    """Strategy does not fit the tree's decision states."""

    def __init__(self, strategy: str, reason: str):
        super().__init__(
            message=f"Invalid strategy: {strategy}",
            error_code=ErrorCode.STRATEGY_INVALID,
            suggestions=[
                "Give one alternative label per decision state, "
                "in declaration order (e.g. '010')",
            ],
            details=f"Reason: {reason}",
        )


class MissingProbabilitiesError(HurwiczError):
    """Simulation needs both probability vectors."""

    def __init__(self, which: str):
        super().__init__(
            message=f"Tree has no {which} probabilities",
            error_code=ErrorCode.PROBABILITIES_MISSING,
            suggestions=["Add 'p1' and 'p2' maps to the tree document"],
        )


# Computation errors


class StrategySpaceTooLargeError(HurwiczError):
    """Pure-strategy count exceeds the configured cap."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            message="Strategy space too large",
            error_code=ErrorCode.STRATEGY_SPACE_TOO_LARGE,
            suggestions=[
                "Reduce the number of decision states or alternatives",
                "Raise the cap with --strategy-cap or HURWICZ_STRATEGY_CAP",
            ],
            details=f"Strategies: {count}, cap: {cap}",
        )


class EmptyMatrixError(HurwiczError, ValueError):
    """Criterion evaluated on an empty row or matrix."""

    def __init__(self, what: str = "row"):
        super().__init__(
            message=f"Cannot evaluate the Hurwicz criterion on an empty {what}",
            error_code=ErrorCode.EMPTY_MATRIX,
        )


class InvalidStepError(HurwiczError, ValueError):
    """Grid step outside (0, 1]."""

    def __init__(self, step: Fraction):
        super().__init__(
            message=f"Grid step {step} is outside (0, 1]",
            error_code=ErrorCode.STEP_OUT_OF_RANGE,
            suggestions=["Use a step such as 1/10 or 0.05"],
        )


class InvalidRiskParameterError(HurwiczError, ValueError):
    """Pessimism parameter outside [0, 1]."""

    def __init__(self, value: Fraction):
        super().__init__(
            message=f"Pessimism parameter {value} is outside [0, 1]",
            error_code=ErrorCode.LAMBDA_OUT_OF_RANGE,
            suggestions=[
                "λ = 1 is extreme pessimism (maximin), λ = 0 extreme optimism (maximax)",
            ],
        )


# Estimation errors


class UnknownObservationError(HurwiczError):
    """Observation record refers to a state or alternative the tree lacks."""

    def __init__(self, index: int, reason: str):
        self.index = index
        super().__init__(
            message=f"Observation {index} does not fit the tree",
            error_code=ErrorCode.OBSERVATION_UNKNOWN,
            suggestions=["Check that the log and the tree describe the same problem"],
            details=f"Reason: {reason}",
        )


# Generic errors


class InvalidArgumentError(HurwiczError):
    """Invalid command-line argument error."""

    def __init__(
        self, argument: str, reason: str, valid_values: list[str] | None = None
    ):
        """Initialize invalid argument error.

        Args:
            argument: Argument name
            reason: Why it's invalid
            valid_values: List of valid values (optional)
        """
        suggestions = [f"Check the {argument} value is correct"]

        if valid_values:
            suggestions.append(f"Valid values: {', '.join(valid_values)}")
            suggestions.append("Run with --help for more information")

        super().__init__(
            message=f"Invalid argument: {argument}",
            error_code=ErrorCode.INVALID_ARGUMENT,
            suggestions=suggestions,
            details=f"Argument: {argument}\nReason: {reason}",
        )


def handle_unexpected_error(error: Exception, debug: bool = False) -> NoReturn:
    """Handle unexpected errors with user-friendly messaging.

    Args:
        error: The unexpected exception
        debug: If True, show full traceback

    Raises:
        SystemExit: Always exits with code 1
    """
    if debug:
        raise error

    console_err.print("[red]Unexpected error:[/red]")
    console_err.print(f"  {type(error).__name__}: {error}")
    console_err.print("\n[yellow]This is likely a bug in hurwicz-profile[/yellow]")
    console_err.print("Include the error message above and the command you ran.")
    console_err.print("\n[dim]Tip: Run with HURWICZ_DEBUG=1 for more details[/dim]")

    sys.exit(1)
