# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Run configuration for hurwicz-profile.

Configuration sources (highest precedence first):

1. Command-line flags
2. Environment variables (HURWICZ_GRID_STEP, HURWICZ_STRATEGY_CAP,
   HURWICZ_PRECISION)
3. Configuration files (.hurwicz.conf, ~/.hurwicz/config)
4. Defaults

configargparse resolves the sources; :class:`RunConfig` validates the result.
"""

from __future__ import annotations

import argparse
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from hurwicz_profile.errors import ErrorCode, HurwiczError
from hurwicz_profile.model import parse_rational

DEFAULT_GRID_STEP = Fraction(1, 10)
DEFAULT_STRATEGY_CAP = 2**20
DEFAULT_PRECISION = 1
TIE_BREAK_RULE = "lowest-index"

DEFAULT_CONFIG_FILES = [".hurwicz.conf", "~/.hurwicz/config"]


class ConfigValidationError(HurwiczError):
    """Raised when a configuration value is out of range."""

    def __init__(self, reason: str):
        super().__init__(
            message="Invalid configuration value",
            error_code=ErrorCode.CONFIG_INVALID_VALUE,
            suggestions=[
                "grid_step must lie in (0, 1]",
                "strategy_cap must be at least 1",
                "precision must be 0 or more",
            ],
            details=reason,
        )


class RunConfig(BaseModel):
    """Validated settings shared by every subcommand."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid_step: Fraction = DEFAULT_GRID_STEP
    strategy_cap: int = DEFAULT_STRATEGY_CAP
    tie_break: Literal["lowest-index"] = TIE_BREAK_RULE
    precision: int = DEFAULT_PRECISION

    @field_validator("grid_step", mode="before")
    @classmethod
    def _coerce_step(cls, value: Any) -> Fraction:
        return parse_rational(value)

    @field_validator("grid_step")
    @classmethod
    def _step_in_range(cls, value: Fraction) -> Fraction:
        if not 0 < value <= 1:
            raise ValueError(f"grid_step {value} is outside (0, 1]")
        return value

    @field_validator("strategy_cap")
    @classmethod
    def _cap_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"strategy_cap {value} is below 1")
        return value

    @field_validator("precision")
    @classmethod
    def _precision_nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"precision {value} is negative")
        return value

    @classmethod
    def build(cls, **values: Any) -> RunConfig:
        """Construct, turning pydantic errors into ConfigValidationError."""
        try:
            return cls(**{k: v for k, v in values.items() if v is not None})
        except ValidationError as e:
            reasons = "; ".join(
                f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}"
                for err in e.errors()
            )
            raise ConfigValidationError(reasons) from e


class ConfigSchema:
    """Describes the available options; ``hurwicz-profile --help`` lists the
    environment variables from it."""

    @staticmethod
    def get_schema() -> dict[str, dict[str, Any]]:
        """Option name → type, default, environment variable and description."""
        return {
            "grid_step": {
                "type": "rational",
                "default": str(DEFAULT_GRID_STEP),
                "env": "HURWICZ_GRID_STEP",
                "description": "Default λ grid step for sweeps and grid estimates",
            },
            "strategy_cap": {
                "type": "int",
                "default": DEFAULT_STRATEGY_CAP,
                "env": "HURWICZ_STRATEGY_CAP",
                "description": "Largest pure-strategy count normalization will enumerate",
            },
            "tie_break": {
                "type": "enum",
                "choices": [TIE_BREAK_RULE],
                "default": TIE_BREAK_RULE,
                "env": None,
                "description": "Rule for equal criterion values (fixed)",
            },
            "precision": {
                "type": "int",
                "default": DEFAULT_PRECISION,
                "env": "HURWICZ_PRECISION",
                "description": "Decimal places for displayed values",
            },
        }


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Build a RunConfig from parsed command-line options (``--step`` → grid_step)."""
    return RunConfig.build(
        grid_step=getattr(args, "step", None),
        strategy_cap=getattr(args, "strategy_cap", None),
        precision=getattr(args, "precision", None),
    )
