# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Observation logs of a simulated decision taker.

Each record draws a first-stage state, applies the decision taker's strategy,
draws a second-stage state and pays the leaf. First-stage draws that land on
a non-decision state are discarded and redrawn: no decision happens there, so
nothing is logged. Records therefore follow the first-stage distribution
renormalized over decision states.

Randomness comes from one ``random.Random`` seeded per call; a given
(tree, behavior, n, seed) always yields the same log.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator

from hurwicz_profile.config import DEFAULT_STRATEGY_CAP
from hurwicz_profile.engine import best_strategy, risk_parameter, strategy_name
from hurwicz_profile.errors import (
    InvalidArgumentError,
    InvalidStrategyError,
    MissingProbabilitiesError,
)
from hurwicz_profile.model import DecisionTree, StateId, Strategy, path_payoff
from hurwicz_profile.normalizer import normalize

logger = logging.getLogger(__name__)

Behavior = Fraction | Strategy


class ObservationRecord(BaseModel):
    """One observed episode: nature, decision, nature, payment."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    index: int
    first: StateId
    decision: int
    second: StateId
    payment: Fraction


class ObservationLog(BaseModel):
    """Ordered observation records, indexed 1..N."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    records: tuple[ObservationRecord, ...]
    tree_name: str = "tree"

    @model_validator(mode="after")
    def _consecutive_indices(self) -> ObservationLog:
        for expected, record in enumerate(self.records, 1):
            if record.index != expected:
                raise ValueError(
                    f"record indices must run 1..N; found {record.index} at position {expected}"
                )
        return self

    def __len__(self) -> int:
        return len(self.records)

    @property
    def mean_payment(self) -> Fraction | None:
        if not self.records:
            return None
        return sum((r.payment for r in self.records), Fraction(0)) / len(self.records)


def check_strategy(tree: DecisionTree, strategy: Strategy) -> Strategy:
    """Raise InvalidStrategyError unless the strategy fits the tree."""
    states = tree.decision_states
    if len(strategy.choices) != len(states):
        raise InvalidStrategyError(
            str(strategy.choices),
            f"expected {len(states)} choices, got {len(strategy.choices)}",
        )
    for first, choice in zip(states, strategy.choices, strict=True):
        if not 0 <= choice < tree.alternative_count(first):
            raise InvalidStrategyError(
                str(strategy.choices), f"state {first} has no alternative {choice}"
            )
    return strategy


def parse_strategy(tree: DecisionTree, text: str) -> Strategy:
    """Read a strategy from concatenated alternative labels, e.g. "010".

    Labels are matched greedily per decision state, so multi-character labels
    work as long as they are unambiguous.
    """
    choices = []
    rest = text
    for first in tree.decision_states:
        labels = tree.alternatives.get(first, ())
        match = max(
            (i for i, label in enumerate(labels) if rest.startswith(label)),
            key=lambda i: len(labels[i]),
            default=None,
        )
        if match is None:
            raise InvalidStrategyError(text, f"no alternative of state {first} at {rest!r}")
        choices.append(match)
        rest = rest[len(labels[match]) :]
    if rest:
        raise InvalidStrategyError(text, f"trailing text {rest!r}")
    return Strategy(choices=tuple(choices))


def applied_strategy(
    tree: DecisionTree, behavior: Behavior, cap: int = DEFAULT_STRATEGY_CAP
) -> Strategy:
    """The strategy a decision taker with this behavior follows."""
    if isinstance(behavior, Strategy):
        return check_strategy(tree, behavior)
    lam = risk_parameter(behavior)
    matrix = normalize(tree, cap)
    index, value = best_strategy(matrix, lam)
    logger.info("λ = %s selects %s (value %s)", lam, strategy_name(index), value)
    return (matrix.strategies or ())[index]


def _draw(
    rng: random.Random, states: Sequence[StateId], probs: dict[StateId, Fraction]
) -> StateId:
    # cumulative inversion over exact probabilities
    u = Fraction(rng.random())
    cumulative = Fraction(0)
    for state in states:
        cumulative += probs[state]
        if u < cumulative:
            return state
    return [s for s in states if probs[s] > 0][-1]


def simulate(
    tree: DecisionTree,
    behavior: Behavior,
    n: int,
    seed: int,
    cap: int = DEFAULT_STRATEGY_CAP,
) -> ObservationLog:
    """Generate ``n`` observations of a decision taker following ``behavior``.

    Args:
        tree: Tree with both probability vectors
        behavior: A pessimism parameter λ (the λ-optimal strategy is computed
            once) or an explicit strategy
        n: Number of records (at least 1)
        seed: Unsigned seed of the pseudo-random stream
        cap: Strategy-count cap for normalization

    Raises:
        MissingProbabilitiesError: If either probability vector is absent
    """
    if tree.p1 is None:
        raise MissingProbabilitiesError("stage-1")
    if tree.p2 is None:
        raise MissingProbabilitiesError("stage-2")
    if n < 1:
        raise InvalidArgumentError("n", f"record count must be at least 1, got {n}")
    if seed < 0:
        raise InvalidArgumentError("seed", f"seed must be unsigned, got {seed}")
    decision_states = set(tree.decision_states)
    if not any(tree.p1.get(s, 0) > 0 for s in decision_states):
        raise MissingProbabilitiesError("decision-state")

    strategy = applied_strategy(tree, behavior, cap)
    position = {first: i for i, first in enumerate(tree.decision_states)}
    rng = random.Random(seed)

    records = []
    for index in range(1, n + 1):
        first = _draw(rng, tree.stage1_ids, tree.p1)
        while first not in decision_states:
            first = _draw(rng, tree.stage1_ids, tree.p1)
        decision = strategy.choices[position[first]]
        second = _draw(rng, tree.stage2, tree.p2)
        records.append(
            ObservationRecord(
                index=index,
                first=first,
                decision=decision,
                second=second,
                payment=path_payoff(tree, first, decision, second),
            )
        )
    logger.debug("Simulated %d records with seed %d", n, seed)
    return ObservationLog(records=tuple(records), tree_name=tree.name)


def expected_payment(tree: DecisionTree, strategy: Strategy) -> Fraction:
    """Exact mean payment of a strategy, given a decision-relevant first stage."""
    if tree.p1 is None:
        raise MissingProbabilitiesError("stage-1")
    if tree.p2 is None:
        raise MissingProbabilitiesError("stage-2")
    check_strategy(tree, strategy)
    mass = sum((tree.p1[s] for s in tree.decision_states), Fraction(0))
    if mass == 0:
        raise MissingProbabilitiesError("decision-state")
    total = Fraction(0)
    for first, choice in zip(tree.decision_states, strategy.choices, strict=True):
        conditional = sum(
            (tree.p2[second] * path_payoff(tree, first, choice, second) for second in tree.stage2),
            Fraction(0),
        )
        total += tree.p1[first] / mass * conditional
    return total


TABLE_1 = (
    ("b", 0, "c", 4),
    ("b", 0, "a", 4),
    ("d", 0, "d", 4),
    ("c", 1, "d", 8),
    ("b", 0, "c", 4),
    ("b", 0, "c", 4),
    ("b", 0, "a", 4),
    ("b", 0, "b", 4),
    ("c", 1, "a", 3),
    ("b", 0, "c", 4),
    ("b", 0, "b", 4),
    ("c", 1, "a", 3),
    ("d", 0, "c", 4),
    ("c", 1, "d", 8),
    ("d", 0, "b", 4),
)


def table1_fixture() -> ObservationLog:
    """The fifteen published observations of the rescue-robot operator."""
    return ObservationLog(
        records=tuple(
            ObservationRecord(
                index=i, first=first, decision=decision, second=second, payment=Fraction(pay)
            )
            for i, (first, decision, second, pay) in enumerate(TABLE_1, 1)
        ),
        tree_name="rs-control",
    )
