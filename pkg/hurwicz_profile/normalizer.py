# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Normal form of a two-stage decision tree.

Rows are pure strategies of the decision taker, columns are compound nature
states (first-stage decision state, second-stage state). Orders are
lexicographic with the first decision state as the most significant digit,
so the worked example reproduces rows 000..111 and columns ba..dd.
"""

from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction

from pydantic import BaseModel, ConfigDict

from hurwicz_profile.config import DEFAULT_STRATEGY_CAP
from hurwicz_profile.errors import EmptyMatrixError, StrategySpaceTooLargeError
from hurwicz_profile.model import (
    CompoundState,
    DecisionTree,
    Strategy,
    path_payoff,
)

logger = logging.getLogger(__name__)


class PayoffMatrix(BaseModel):
    """Strategies × compound states, exact payoffs.

    ``strategies`` and ``states`` are present when the matrix was built from a
    tree; a matrix read from a file carries only the text labels.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    row_labels: tuple[str, ...]
    column_labels: tuple[str, ...]
    cells: tuple[tuple[Fraction, ...], ...]
    strategies: tuple[Strategy, ...] | None = None
    states: tuple[CompoundState, ...] | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.cells), len(self.column_labels)

    def row(self, index: int) -> tuple[Fraction, ...]:
        return self.cells[index]

    def require_rows(self) -> None:
        """Raise EmptyMatrixError unless there is at least one non-empty row."""
        if not self.cells:
            raise EmptyMatrixError("matrix")
        if any(not row for row in self.cells):
            raise EmptyMatrixError("row")

    def transformed(self, scale: Fraction, shift: Fraction) -> PayoffMatrix:
        """Matrix with every cell mapped to ``scale * cell + shift``."""
        return self.model_copy(
            update={
                "cells": tuple(
                    tuple(scale * cell + shift for cell in row) for row in self.cells
                )
            }
        )


def strategy_count(tree: DecisionTree) -> int:
    """Number of pure strategies: the product of alternative counts over decision states."""
    return math.prod(tree.alternative_count(first) for first in tree.decision_states)


def enumerate_strategies(
    tree: DecisionTree, cap: int = DEFAULT_STRATEGY_CAP
) -> list[Strategy]:
    """All pure strategies, lexicographic, first decision state most significant.

    Raises:
        StrategySpaceTooLargeError: If the count exceeds ``cap``
    """
    count = strategy_count(tree)
    if count > cap:
        raise StrategySpaceTooLargeError(count, cap)
    ranges = [range(tree.alternative_count(first)) for first in tree.decision_states]
    return [Strategy(choices=choices) for choices in itertools.product(*ranges)]


def enumerate_states(tree: DecisionTree) -> list[CompoundState]:
    """Compound states: decision states outer, stage-2 states inner."""
    return [
        CompoundState(first=first, second=second)
        for first in tree.decision_states
        for second in tree.stage2
    ]


def normalize(tree: DecisionTree, cap: int = DEFAULT_STRATEGY_CAP) -> PayoffMatrix:
    """Build the normalized payoff matrix of ``tree``.

    Cell (h, j) is the payoff of the leaf reached when nature plays column j's
    first-stage state, strategy h answers it, and nature plays column j's
    second-stage state.
    """
    strategies = enumerate_strategies(tree, cap)
    states = enumerate_states(tree)
    position = {first: i for i, first in enumerate(tree.decision_states)}

    cells = tuple(
        tuple(
            path_payoff(tree, s.first, strategy.choices[position[s.first]], s.second)
            for s in states
        )
        for strategy in strategies
    )
    logger.debug(
        "Normalized %s: %d strategies x %d states", tree.name, len(strategies), len(states)
    )
    return PayoffMatrix(
        row_labels=tuple(strategy.label(tree) for strategy in strategies),
        column_labels=tuple(s.label for s in states),
        cells=cells,
        strategies=tuple(strategies),
        states=tuple(states),
    )
