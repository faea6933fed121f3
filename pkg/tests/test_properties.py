# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Randomized properties of normalization, the criterion, regions and estimation."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from strategies import decision_trees, observation_logs, payoff_matrices, pessimism

from hurwicz_profile.documents import (
    parse_log,
    parse_matrix,
    parse_tree,
    serialize_log,
    serialize_matrix,
    serialize_tree,
)
from hurwicz_profile.engine import (
    best_strategy,
    envelope_value,
    grid_points,
    hurwicz_value,
    invert,
    strategy_regions,
    sweep,
)
from hurwicz_profile.estimator import estimate_lambda, infer_strategy, regret_fallback
from hurwicz_profile.model import DecisionTree, Strategy
from hurwicz_profile.normalizer import PayoffMatrix, normalize
from hurwicz_profile.simulator import ObservationLog, simulate

pytestmark = pytest.mark.property

EXAMPLES = 200
TWENTIETHS = grid_points(Fraction(1, 20))


def _traverse(tree: DecisionTree) -> dict[tuple[str, str, str], Fraction]:
    """Cell per (strategy label, decision state, stage-2 state), walking the tree directly."""
    decisions = tree.decision_states
    cells = {}
    for choices in itertools.product(*(tree.alternatives[s] for s in decisions)):
        label = "".join(choices)
        for first, choice in zip(decisions, choices, strict=True):
            alt = tree.alternatives[first].index(choice)
            for second in tree.stage2:
                cells[(label, first, second)] = tree.payoff[(first, alt, second)]
    return cells


class TestNormalizeProperties:
    @settings(max_examples=EXAMPLES)
    @given(decision_trees())
    def test_matches_direct_traversal(self, tree: DecisionTree) -> None:
        """Every cell is the leaf reached by the row's choice in the column's states."""
        matrix = normalize(tree)
        expected = _traverse(tree)
        assert len(matrix.cells) * len(matrix.column_labels) == len(expected)
        assert list(matrix.row_labels) == sorted(matrix.row_labels)
        for h, label in enumerate(matrix.row_labels):
            for j, state in enumerate(matrix.states or ()):
                assert matrix.cells[h][j] == expected[(label, state.first, state.second)]

    @settings(max_examples=EXAMPLES)
    @given(decision_trees())
    def test_shape(self, tree: DecisionTree) -> None:
        matrix = normalize(tree)
        rows = 1
        for state in tree.decision_states:
            rows *= len(tree.alternatives[state])
        assert matrix.shape == (rows, len(tree.decision_states) * len(tree.stage2))


class TestCriterionProperties:
    @settings(max_examples=EXAMPLES)
    @given(payoff_matrices(), pessimism, pessimism)
    def test_value_is_monotone_in_lambda(self, matrix: PayoffMatrix, a: Fraction, b: Fraction) -> None:
        """More pessimism never raises a strategy's value."""
        lo, hi = sorted((a, b))
        for row in matrix.cells:
            assert hurwicz_value(row, hi) <= hurwicz_value(row, lo)

    @settings(max_examples=EXAMPLES)
    @given(payoff_matrices())
    def test_endpoints(self, matrix: PayoffMatrix) -> None:
        for row in matrix.cells:
            assert hurwicz_value(row, 0) == max(row)
            assert hurwicz_value(row, 1) == min(row)

    @settings(max_examples=EXAMPLES)
    @given(
        payoff_matrices(),
        pessimism,
        st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=10),
        st.fractions(min_value=-10, max_value=10, max_denominator=10),
    )
    def test_selection_survives_positive_affine_maps(
        self, matrix: PayoffMatrix, lam: Fraction, scale: Fraction, shift: Fraction
    ) -> None:
        index, value = best_strategy(matrix, lam)
        moved_index, moved_value = best_strategy(matrix.transformed(scale, shift), lam)
        assert moved_index == index
        assert moved_value == scale * value + shift

    @settings(max_examples=EXAMPLES)
    @given(payoff_matrices(), pessimism, pessimism)
    def test_envelope_is_convex_and_non_increasing(
        self, matrix: PayoffMatrix, a: Fraction, b: Fraction
    ) -> None:
        lo, hi = sorted((a, b))
        assert envelope_value(matrix, hi) <= envelope_value(matrix, lo)
        middle = (lo + hi) / 2
        assert 2 * envelope_value(matrix, middle) <= envelope_value(matrix, lo) + envelope_value(matrix, hi)

    @settings(max_examples=EXAMPLES)
    @given(payoff_matrices())
    def test_sweep_agrees_with_pointwise_selection(self, matrix: PayoffMatrix) -> None:
        table = sweep(matrix, Fraction(1, 20))
        for position, lam in enumerate(table.grid):
            column = [values[position] for values in table.values]
            assert table.best_values[position] == max(column)
            assert table.best_strategies[position] == best_strategy(matrix, lam)[0]


class TestRegionProperties:
    @settings(max_examples=EXAMPLES)
    @given(payoff_matrices())
    def test_regions_partition_unit_interval(self, matrix: PayoffMatrix) -> None:
        regions = strategy_regions(matrix).regions
        assert regions[0].lo == 0
        assert regions[-1].hi == 1
        for region in regions:
            assert region.lo <= region.hi
        for left, right in itertools.pairwise(regions):
            assert left.hi == right.lo

    @settings(max_examples=EXAMPLES)
    @given(payoff_matrices(), pessimism)
    def test_regions_agree_with_best_strategy(self, matrix: PayoffMatrix, lam: Fraction) -> None:
        regions = strategy_regions(matrix)
        for point in [lam, *TWENTIETHS]:
            assert regions.strategy_at(point) == best_strategy(matrix, point)[0]

    @settings(max_examples=EXAMPLES)
    @given(payoff_matrices(), pessimism)
    def test_invert_is_consistent(self, matrix: PayoffMatrix, lam: Fraction) -> None:
        """λ is in a strategy's selected set iff that strategy is selected at λ."""
        chosen, best = best_strategy(matrix, lam)
        for h, row in enumerate(matrix.cells):
            selected = invert(matrix, h, "selected")
            admissible = invert(matrix, h, "admissible")
            assert selected.contains(lam) == (h == chosen)
            assert admissible.contains(lam) == (hurwicz_value(row, lam) == best)
            if selected.contains(lam):
                assert admissible.contains(lam)

    @settings(max_examples=EXAMPLES)
    @given(payoff_matrices())
    def test_grid_invert_samples_exact_invert(self, matrix: PayoffMatrix) -> None:
        for h in range(len(matrix.cells)):
            for mode in ("selected", "admissible"):
                exact = invert(matrix, h, mode)
                grid = invert(matrix, h, mode, Fraction(1, 20))
                assert grid.points == tuple(p for p in TWENTIETHS if exact.contains(p))


class TestDocumentProperties:
    @settings(max_examples=EXAMPLES)
    @given(decision_trees())
    def test_tree_round_trip(self, tree: DecisionTree) -> None:
        assert parse_tree(serialize_tree(tree)) == tree

    @settings(max_examples=EXAMPLES)
    @given(payoff_matrices())
    def test_matrix_round_trip(self, matrix: PayoffMatrix) -> None:
        parsed = parse_matrix(serialize_matrix(matrix))
        assert (parsed.row_labels, parsed.column_labels, parsed.cells) == (
            matrix.row_labels,
            matrix.column_labels,
            matrix.cells,
        )

    @settings(max_examples=EXAMPLES)
    @given(observation_logs())
    def test_log_round_trip(self, log: ObservationLog) -> None:
        assert parse_log(serialize_log(log), tree_name=log.tree_name) == log


class TestEstimationProperties:
    @settings(max_examples=EXAMPLES, deadline=None)
    @given(decision_trees(), pessimism, st.integers(min_value=0, max_value=2**16))
    def test_simulated_lambda_is_recovered(self, tree: DecisionTree, lam: Fraction, seed: int) -> None:
        """A log generated at λ never rules λ out."""
        assume(any(tree.p1 and tree.p1[s] > 0 for s in tree.decision_states))
        log = simulate(tree, lam, n=30, seed=seed)
        profile = estimate_lambda(log, tree, mode="exact")
        assert profile.status != "non-rationalizable"
        assert profile.estimate.contains(lam)

    @settings(max_examples=EXAMPLES, deadline=None)
    @given(decision_trees(), st.data())
    def test_explicit_strategy_is_inferred(self, tree: DecisionTree, data: st.DataObject) -> None:
        """Every observed state votes for the simulated strategy's choice."""
        assume(any(tree.p1 and tree.p1[s] > 0 for s in tree.decision_states))
        choices = tuple(
            data.draw(st.integers(min_value=0, max_value=len(tree.alternatives[s]) - 1))
            for s in tree.decision_states
        )
        strategy = Strategy(choices=choices)
        log = simulate(tree, strategy, n=40, seed=data.draw(st.integers(0, 1000)))
        inference = infer_strategy(log, tree)
        for position, tally in enumerate(inference.tallies):
            if tally.inferred is not None:
                assert tally.inferred == choices[position]
        if inference.is_total:
            assert inference.strategy == strategy

    @settings(max_examples=EXAMPLES, deadline=None)
    @given(decision_trees(), pessimism, st.integers(min_value=0, max_value=1000))
    def test_repeating_the_log_changes_nothing(self, tree: DecisionTree, lam: Fraction, seed: int) -> None:
        """More records consistent with the inferred strategy keep the estimate."""
        assume(any(tree.p1 and tree.p1[s] > 0 for s in tree.decision_states))
        log = simulate(tree, lam, n=10, seed=seed)
        doubled = ObservationLog(
            records=log.records
            + tuple(r.model_copy(update={"index": r.index + len(log)}) for r in log.records)
        )
        first = estimate_lambda(log, tree, mode="exact")
        second = estimate_lambda(doubled, tree, mode="exact")
        assert second.inference.completion == first.inference.completion
        assert second.estimate == first.estimate

    @settings(max_examples=EXAMPLES, deadline=None)
    @given(decision_trees(), pessimism, st.integers(min_value=0, max_value=1000))
    def test_partial_estimate_covers_every_completion(
        self, tree: DecisionTree, lam: Fraction, seed: int
    ) -> None:
        assume(any(tree.p1 and tree.p1[s] > 0 for s in tree.decision_states))
        log = simulate(tree, lam, n=3, seed=seed)
        profile = estimate_lambda(log, tree, mode="exact")
        matrix = normalize(tree)
        for h in profile.inference.completion:
            selected = invert(matrix, h, "selected")
            for point in [*TWENTIETHS, *strategy_regions(matrix).breakpoints]:
                if selected.contains(point):
                    assert profile.estimate.contains(point)

    @settings(max_examples=EXAMPLES)
    @given(payoff_matrices())
    def test_zero_regret_iff_admissible(self, matrix: PayoffMatrix) -> None:
        for h in range(len(matrix.cells)):
            _, regret = regret_fallback(matrix, h)
            assert regret >= 0
            assert (regret == 0) == (not invert(matrix, h, "admissible").is_empty)
