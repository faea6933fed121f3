# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Hurwicz criterion over the pessimism parameter λ.

For a row of payoffs the criterion is ``λ·min + (1 − λ)·max``; λ = 1 is
extreme caution (maximin), λ = 0 extreme optimism (maximax). Each row is an
affine function of λ, so the optimal value V(λ) is the upper envelope of
those lines: convex, piecewise linear and non-increasing.

Ties between strategies go to the lowest strategy index everywhere: in
point evaluations, in sweeps and on region boundaries.

Strategy indices are 0-based; ``strategy_name`` renders them 1-based.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict

from hurwicz_profile.config import DEFAULT_GRID_STEP
from hurwicz_profile.errors import (
    EmptyMatrixError,
    InvalidRiskParameterError,
    InvalidStepError,
    InvalidStrategyError,
)
from hurwicz_profile.model import exact_decimal, parse_rational
from hurwicz_profile.normalizer import PayoffMatrix

logger = logging.getLogger(__name__)

InvertMode = Literal["selected", "admissible"]


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def strategy_name(index: int) -> str:
    """Display name of a 0-based strategy index: 0 → "f1"."""
    return f"f{index + 1}"


def risk_parameter(value: object) -> Fraction:
    """Validate a pessimism parameter and return it as an exact Fraction.

    Raises:
        InvalidRiskParameterError: If the value lies outside [0, 1]
    """
    lam = value if isinstance(value, Fraction) else parse_rational(value)
    if not 0 <= lam <= 1:
        raise InvalidRiskParameterError(lam)
    return lam


def grid_points(step: object = DEFAULT_GRID_STEP) -> list[Fraction]:
    """{0, step, 2·step, …} up to 1, with 1 appended when step does not divide it.

    Raises:
        InvalidStepError: If step is outside (0, 1]
    """
    step = step if isinstance(step, Fraction) else parse_rational(step)
    if not 0 < step <= 1:
        raise InvalidStepError(step)
    points = []
    k = 0
    while k * step <= 1:
        points.append(k * step)
        k += 1
    if points[-1] != 1:
        points.append(Fraction(1))
    return points


class CriterionLine(_Frozen):
    """L(h, λ) = intercept + slope·λ with intercept = row max, slope = min − max."""

    strategy: int
    intercept: Fraction
    slope: Fraction

    def value_at(self, lam: Fraction) -> Fraction:
        return self.intercept + self.slope * lam


def hurwicz_value(row: Sequence[Fraction], lam: object) -> Fraction:
    """λ·min(row) + (1 − λ)·max(row), exact.

    Raises:
        EmptyMatrixError: If the row is empty
    """
    if not row:
        raise EmptyMatrixError("row")
    lam = risk_parameter(lam)
    return lam * min(row) + (1 - lam) * max(row)


def criterion_lines(matrix: PayoffMatrix) -> list[CriterionLine]:
    """One line per strategy: L(h, λ) = max_h + λ·(min_h − max_h).

    Raises:
        EmptyMatrixError: If the matrix or any row is empty
    """
    matrix.require_rows()
    return [
        CriterionLine(strategy=h, intercept=max(row), slope=min(row) - max(row))
        for h, row in enumerate(matrix.cells)
    ]


def _select(lines: Iterable[CriterionLine], lam: Fraction) -> tuple[int, Fraction]:
    best: tuple[int, Fraction] | None = None
    for line in lines:
        value = line.value_at(lam)
        # strict: equal values keep the lower index
        if best is None or value > best[1]:
            best = (line.strategy, value)
    if best is None:
        raise EmptyMatrixError("matrix")
    return best


def best_strategy(matrix: PayoffMatrix, lam: object) -> tuple[int, Fraction]:
    """Maximizing strategy index and its criterion value; ties → lowest index."""
    return _select(criterion_lines(matrix), risk_parameter(lam))


def envelope_value(matrix: PayoffMatrix, lam: object) -> Fraction:
    """V(λ), the best criterion value at λ."""
    return best_strategy(matrix, lam)[1]


def maximin_strategy(matrix: PayoffMatrix) -> tuple[int, Fraction]:
    """Wald's cautious selection: the λ = 1 end of the criterion."""
    return best_strategy(matrix, Fraction(1))


def maximax_strategy(matrix: PayoffMatrix) -> tuple[int, Fraction]:
    """Optimist's selection: the λ = 0 end of the criterion."""
    return best_strategy(matrix, Fraction(0))


class SweepTable(_Frozen):
    """Criterion values on a λ grid, one row per strategy."""

    grid: tuple[Fraction, ...]
    row_labels: tuple[str, ...]
    values: tuple[tuple[Fraction, ...], ...]
    best_values: tuple[Fraction, ...]
    best_strategies: tuple[int, ...]

    def column(self, lam: Fraction) -> int:
        return self.grid.index(lam)


def sweep(matrix: PayoffMatrix, step: object = DEFAULT_GRID_STEP) -> SweepTable:
    """Evaluate every strategy on the regular λ grid of the given step."""
    grid = grid_points(step)
    lines = criterion_lines(matrix)
    selections = [_select(lines, lam) for lam in grid]
    return SweepTable(
        grid=tuple(grid),
        row_labels=matrix.row_labels,
        values=tuple(tuple(line.value_at(lam) for lam in grid) for line in lines),
        best_values=tuple(value for _, value in selections),
        best_strategies=tuple(index for index, _ in selections),
    )


class LambdaRegion(_Frozen):
    """Closed interval [lo, hi] of λ labeled with the strategy selected inside it."""

    strategy: int
    lo: Fraction
    hi: Fraction

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi


class LambdaRegionSet(_Frozen):
    """Partition of [0, 1] into regions of the selected strategy.

    ``owners`` maps every region endpoint to the strategy ``best_strategy``
    selects exactly there.
    """

    regions: tuple[LambdaRegion, ...]
    owners: tuple[tuple[Fraction, int], ...]

    @property
    def breakpoints(self) -> tuple[Fraction, ...]:
        return tuple(point for point, _ in self.owners)

    def owner_at(self, point: Fraction) -> int | None:
        for candidate, owner in self.owners:
            if candidate == point:
                return owner
        return None

    def strategy_at(self, lam: object) -> int:
        """Strategy selected at λ, read off the regions."""
        lam = risk_parameter(lam)
        owner = self.owner_at(lam)
        if owner is not None:
            return owner
        for region in self.regions:
            if region.lo < lam < region.hi:
                return region.strategy
        raise AssertionError(f"regions do not cover {lam}")


def _rightward_leader(lines: Sequence[CriterionLine], lam: Fraction) -> CriterionLine:
    # best just to the right of lam: highest value, then flattest descent, then lowest index
    return max(lines, key=lambda line: (line.value_at(lam), line.slope, -line.strategy))


def strategy_regions(matrix: PayoffMatrix) -> LambdaRegionSet:
    """Exact regions of the selected strategy over λ ∈ [0, 1].

    Walks the upper envelope from λ = 0: the current leader is overtaken only
    by lines with a larger slope, at the nearest crossing. Each step strictly
    increases the leader's slope, so the walk ends after at most one step per
    strategy.
    """
    lines = criterion_lines(matrix)
    segments: list[tuple[int, Fraction, Fraction]] = []
    lo = Fraction(0)
    leader = _rightward_leader(lines, lo)
    while True:
        crossing: Fraction | None = None
        for line in lines:
            if line.slope > leader.slope:
                x = (leader.intercept - line.intercept) / (line.slope - leader.slope)
                if x > lo and (crossing is None or x < crossing):
                    crossing = x
        if crossing is None or crossing >= 1:
            segments.append((leader.strategy, lo, Fraction(1)))
            break
        segments.append((leader.strategy, lo, crossing))
        lo = crossing
        leader = _rightward_leader(lines, lo)

    points = [seg_lo for _, seg_lo, _ in segments] + [Fraction(1)]
    owners = tuple((point, _select(lines, point)[0]) for point in points)

    regions: list[LambdaRegion] = []
    for i, (strategy, seg_lo, seg_hi) in enumerate(segments):
        owner = owners[i][1]
        previous = segments[i - 1][0] if i else None
        if owner not in (strategy, previous):
            regions.append(LambdaRegion(strategy=owner, lo=seg_lo, hi=seg_lo))
        regions.append(LambdaRegion(strategy=strategy, lo=seg_lo, hi=seg_hi))
    last_owner = owners[-1][1]
    if last_owner != segments[-1][0]:
        regions.append(LambdaRegion(strategy=last_owner, lo=Fraction(1), hi=Fraction(1)))

    logger.debug(
        "Envelope regions: %s",
        ", ".join(f"{strategy_name(r.strategy)}[{r.lo}, {r.hi}]" for r in regions),
    )
    return LambdaRegionSet(regions=tuple(regions), owners=owners)


class Interval(_Frozen):
    """Interval of λ with independently open or closed ends."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi or (
            self.lo == self.hi and not (self.lo_closed and self.hi_closed)
        )

    def contains(self, lam: Fraction) -> bool:
        above = self.lo < lam or (self.lo_closed and lam == self.lo)
        below = lam < self.hi or (self.hi_closed and lam == self.hi)
        return above and below

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo}, {self.hi}{right}"


def _merge(intervals: Iterable[Interval]) -> tuple[Interval, ...]:
    items = sorted(
        (i for i in intervals if not i.is_empty), key=lambda i: (i.lo, not i.lo_closed)
    )
    merged: list[Interval] = []
    for item in items:
        if merged:
            last = merged[-1]
            touches = item.lo < last.hi or (
                item.lo == last.hi and (last.hi_closed or item.lo_closed)
            )
            if touches:
                if item.hi > last.hi:
                    hi, hi_closed = item.hi, item.hi_closed
                elif item.hi == last.hi:
                    hi, hi_closed = last.hi, last.hi_closed or item.hi_closed
                else:
                    hi, hi_closed = last.hi, last.hi_closed
                merged[-1] = last.model_copy(update={"hi": hi, "hi_closed": hi_closed})
                continue
        merged.append(item)
    return tuple(merged)


class LambdaSet(_Frozen):
    """A set of λ values: exact intervals, or points of a grid."""

    mode: Literal["exact", "grid"]
    intervals: tuple[Interval, ...] = ()
    points: tuple[Fraction, ...] = ()

    @classmethod
    def exact(cls, intervals: Iterable[Interval]) -> LambdaSet:
        return cls(mode="exact", intervals=_merge(intervals))

    @classmethod
    def grid(cls, points: Iterable[Fraction]) -> LambdaSet:
        return cls(mode="grid", points=tuple(sorted(set(points))))

    @property
    def is_empty(self) -> bool:
        return not self.intervals and not self.points

    def contains(self, lam: Fraction) -> bool:
        if self.mode == "grid":
            return lam in self.points
        return any(interval.contains(lam) for interval in self.intervals)

    def union(self, other: LambdaSet) -> LambdaSet:
        if other.mode != self.mode:
            raise ValueError(f"cannot join {self.mode} and {other.mode} λ sets")
        if self.mode == "grid":
            return LambdaSet.grid(self.points + other.points)
        return LambdaSet.exact(self.intervals + other.intervals)

    def describe(self) -> str:
        """Text form, e.g. "λ ∈ (2/5, 4/5)" or "λ ∈ {0.5, 0.6, 0.7}"."""
        if self.is_empty:
            return "λ ∈ ∅"
        if self.mode == "grid":
            return "λ ∈ {" + ", ".join(exact_decimal(p) for p in self.points) + "}"
        return "λ ∈ " + " ∪ ".join(str(interval) for interval in self.intervals)


def check_strategy_index(matrix: PayoffMatrix, strategy: int) -> None:
    """Reject a strategy index outside the matrix rows.

    Raises:
        InvalidStrategyError: If ``strategy`` is not a row of ``matrix``
    """
    if not 0 <= strategy < len(matrix.cells):
        raise InvalidStrategyError(
            strategy_name(strategy), f"matrix has {len(matrix.cells)} strategies"
        )


def invert(
    matrix: PayoffMatrix,
    strategy: int,
    mode: InvertMode = "selected",
    step: object | None = None,
) -> LambdaSet:
    """λ values at which ``strategy`` is chosen.

    ``selected``: values where best_strategy returns exactly this index.
    ``admissible``: values where this strategy attains the maximum, tie or not.
    With ``step`` the answer is the matching subset of that grid; without it,
    exact intervals. An empty set means the strategy is never chosen.
    """
    check_strategy_index(matrix, strategy)
    lines = criterion_lines(matrix)
    line = lines[strategy]

    if step is not None:
        grid = grid_points(step)
        if mode == "selected":
            return LambdaSet.grid(lam for lam in grid if _select(lines, lam)[0] == strategy)
        return LambdaSet.grid(
            lam for lam in grid if line.value_at(lam) == _select(lines, lam)[1]
        )

    regions = strategy_regions(matrix)
    if mode == "selected":
        return LambdaSet.exact(
            Interval(
                lo=region.lo,
                hi=region.hi,
                lo_closed=regions.owner_at(region.lo) == strategy,
                hi_closed=regions.owner_at(region.hi) == strategy,
            )
            for region in regions.regions
            if region.strategy == strategy
        )

    # V − L is convex and non-negative, so its zero set is one closed interval
    # whose ends are envelope breakpoints.
    zeros = [
        point
        for point in regions.breakpoints
        if line.value_at(point) == _select(lines, point)[1]
    ]
    if not zeros:
        return LambdaSet.exact(())
    return LambdaSet.exact([Interval(lo=min(zeros), hi=max(zeros))])
