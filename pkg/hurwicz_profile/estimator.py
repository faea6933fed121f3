# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Risk-attitude estimation from observed decisions.

The decision taker's strategy is read off the log by a majority vote in each
decision state; the pessimism parameter λ is then the set of values at which
the Hurwicz criterion selects that strategy.

Three outcomes:

- identified: every decision state was observed and the strategy is selected
  for some λ; the estimate is that λ set.
- partially-identified: some decision states were never observed; the
  estimate is the union over every strategy that agrees with what was seen.
- non-rationalizable: no λ selects the observed strategy (or any
  completion); the estimate is empty and a regret-minimizing λ̂ is reported
  instead.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict

from hurwicz_profile.config import DEFAULT_GRID_STEP, DEFAULT_STRATEGY_CAP
from hurwicz_profile.engine import (
    LambdaSet,
    check_strategy_index,
    criterion_lines,
    invert,
    strategy_name,
    strategy_regions,
)
from hurwicz_profile.errors import UnknownObservationError
from hurwicz_profile.model import DecisionTree, StateId, Strategy
from hurwicz_profile.normalizer import PayoffMatrix, enumerate_strategies, normalize
from hurwicz_profile.simulator import ObservationLog, expected_payment

logger = logging.getLogger(__name__)

Identifiability = Literal["identified", "partially-identified", "non-rationalizable"]
EstimateMode = Literal["exact", "grid"]


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class StateTally(_Frozen):
    """Decision counts observed in one decision state."""

    state: StateId
    counts: tuple[int, ...]
    inferred: int | None
    ambiguous: bool = False

    @property
    def observations(self) -> int:
        return sum(self.counts)


class StrategyInference(_Frozen):
    """Per-state majority votes and the strategies consistent with them.

    ``completion`` lists the indices (normal-form order) of every strategy
    agreeing with all inferred alternatives; it has one element when the
    strategy is total.
    """

    tallies: tuple[StateTally, ...]
    strategy: Strategy | None
    completion: tuple[int, ...]

    @property
    def is_total(self) -> bool:
        return self.strategy is not None

    @property
    def unobserved(self) -> tuple[StateId, ...]:
        return tuple(t.state for t in self.tallies if t.inferred is None)

    @property
    def ambiguous(self) -> tuple[StateId, ...]:
        return tuple(t.state for t in self.tallies if t.ambiguous)


class RiskProfile(_Frozen):
    """Estimated risk attitude of one decision taker."""

    inference: StrategyInference
    estimate: LambdaSet
    status: Identifiability
    fallback_lambda: Fraction | None = None
    fallback_regret: Fraction | None = None
    fallback_strategy: int | None = None
    expected_payment: Fraction | None = None
    mean_payment: Fraction | None = None

    @property
    def strategy_index(self) -> int | None:
        if self.inference.is_total:
            return self.inference.completion[0]
        return None


def infer_strategy(
    log: ObservationLog, tree: DecisionTree, cap: int = DEFAULT_STRATEGY_CAP
) -> StrategyInference:
    """Majority decision per decision state.

    Ties pick the lowest alternative index and flag the state as ambiguous;
    states absent from the log stay open and widen the completion set.

    Raises:
        UnknownObservationError: naming the first record that does not fit the tree
    """
    states = tree.decision_states
    counts = {first: [0] * tree.alternative_count(first) for first in states}
    for record in log.records:
        if record.first not in counts:
            raise UnknownObservationError(
                record.index, f"{record.first!r} is not a decision state"
            )
        if not 0 <= record.decision < len(counts[record.first]):
            raise UnknownObservationError(
                record.index,
                f"state {record.first} has no alternative {record.decision}",
            )
        if record.second not in tree.stage2:
            raise UnknownObservationError(
                record.index, f"{record.second!r} is not a stage-2 state"
            )
        counts[record.first][record.decision] += 1

    tallies = []
    for first in states:
        row = counts[first]
        top = max(row)
        if top == 0:
            tallies.append(StateTally(state=first, counts=tuple(row), inferred=None))
            continue
        winners = [alt for alt, count in enumerate(row) if count == top]
        tallies.append(
            StateTally(
                state=first,
                counts=tuple(row),
                inferred=winners[0],
                ambiguous=len(winners) > 1,
            )
        )

    completion = tuple(
        h
        for h, strategy in enumerate(enumerate_strategies(tree, cap))
        if all(
            t.inferred is None or strategy.choices[i] == t.inferred
            for i, t in enumerate(tallies)
        )
    )
    total = all(t.inferred is not None for t in tallies)
    strategy = (
        Strategy(choices=tuple(t.inferred for t in tallies if t.inferred is not None))
        if total
        else None
    )
    for t in tallies:
        if t.inferred is None:
            logger.warning("Decision state %s never observed", t.state)
        elif t.ambiguous:
            logger.warning("Decision state %s has a majority tie %s", t.state, t.counts)
    return StrategyInference(tallies=tuple(tallies), strategy=strategy, completion=completion)


def regret_fallback(matrix: PayoffMatrix, strategy: int) -> tuple[Fraction, Fraction]:
    """λ̂ minimizing V(λ) − L(strategy, λ) over [0, 1], with the minimum regret.

    The objective is piecewise linear with kinks only at envelope breakpoints,
    so it suffices to scan those and the ends. Ties go to the smallest λ̂.
    """
    check_strategy_index(matrix, strategy)
    lines = criterion_lines(matrix)
    line = lines[strategy]
    best: tuple[Fraction, Fraction] | None = None
    for point in strategy_regions(matrix).breakpoints:
        envelope = max(other.value_at(point) for other in lines)
        regret = envelope - line.value_at(point)
        if best is None or regret < best[1]:
            best = (point, regret)
    if best is None:
        raise AssertionError("envelope has no breakpoints")
    return best


def estimate_lambda(
    log: ObservationLog,
    tree: DecisionTree,
    mode: EstimateMode = "exact",
    step: object = DEFAULT_GRID_STEP,
    cap: int = DEFAULT_STRATEGY_CAP,
) -> RiskProfile:
    """Estimate λ for the decision taker behind ``log``.

    Rationalizability is judged on exact λ regions in both modes; grid mode
    only changes the reported set, which can be empty for a rationalizable
    strategy whose region falls between grid points.
    """
    inference = infer_strategy(log, tree, cap)
    matrix = normalize(tree, cap)
    grid_step = step if mode == "grid" else None

    estimate = LambdaSet.exact(()) if mode == "exact" else LambdaSet.grid(())
    rationalizable = False
    for h in inference.completion:
        estimate = estimate.union(invert(matrix, h, "selected", grid_step))
        if grid_step is None:
            rationalizable = rationalizable or not estimate.is_empty
        else:
            rationalizable = rationalizable or not invert(matrix, h, "selected").is_empty

    expected = None
    if inference.strategy is not None and tree.has_probabilities():
        expected = expected_payment(tree, inference.strategy)

    if rationalizable:
        status: Identifiability = (
            "identified" if inference.is_total else "partially-identified"
        )
        if mode == "grid" and estimate.is_empty:
            logger.warning(
                "No grid point selects the observed strategy; try a finer --step"
            )
        logger.info("Estimate (%s): %s", status, estimate.describe())
        return RiskProfile(
            inference=inference,
            estimate=estimate,
            status=status,
            expected_payment=expected,
            mean_payment=log.mean_payment,
        )

    candidates = [(regret_fallback(matrix, h), h) for h in inference.completion]
    (lam_hat, regret), fallback = min(candidates, key=lambda c: (c[0][1], c[0][0], c[1]))
    logger.warning(
        "%s is never selected by the Hurwicz rule; closest λ̂ = %s (regret %s)",
        strategy_name(fallback),
        lam_hat,
        regret,
    )
    return RiskProfile(
        inference=inference,
        estimate=estimate,
        status="non-rationalizable",
        fallback_lambda=lam_hat,
        fallback_regret=regret,
        fallback_strategy=fallback,
        expected_payment=expected,
        mean_payment=log.mean_payment,
    )
