# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Plain-text rendering of matrices, sweeps, regions and risk profiles.

Tables are tab-delimited, one line per row, with no markup so they can be
diffed or piped. Decimal display rounds half-to-even and never depends on
the locale.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from hurwicz_profile.config import DEFAULT_PRECISION
from hurwicz_profile.engine import LambdaRegionSet, SweepTable, strategy_name
from hurwicz_profile.estimator import RiskProfile
from hurwicz_profile.model import (
    DecisionTree,
    exact_decimal,
    format_decimal,
    format_rational,
)
from hurwicz_profile.normalizer import PayoffMatrix

DELIMITER = "\t"


def _line(cells: list[str]) -> str:
    return DELIMITER.join(cells)


def _cell(value: Fraction, precision: int) -> str:
    # integral payoffs print as integers, as in the payment matrix
    if value.denominator == 1:
        return str(value.numerator)
    return format_decimal(value, precision)


def render_matrix(matrix: PayoffMatrix, precision: int = DEFAULT_PRECISION) -> str:
    """Strategies down, compound states across.

    The header starts with ``strategy`` followed by the column labels; each
    row starts with the strategy label.
    """
    lines = [_line(["strategy", *matrix.column_labels])]
    for label, row in zip(matrix.row_labels, matrix.cells, strict=True):
        lines.append(_line([label, *(_cell(v, precision) for v in row)]))
    return "\n".join(lines) + "\n"


def render_sweep(table: SweepTable, precision: int = DEFAULT_PRECISION) -> str:
    """Criterion values per strategy and grid point, then the L* and f* rows."""
    lines = [_line(["λ", *(exact_decimal(lam) for lam in table.grid)])]
    for label, values in zip(table.row_labels, table.values, strict=True):
        lines.append(_line([label, *(format_decimal(v, precision) for v in values)]))
    lines.append(_line(["L*(λ)", *(format_decimal(v, precision) for v in table.best_values)]))
    lines.append(_line(["f*(λ)", *(strategy_name(h) for h in table.best_strategies)]))
    return "\n".join(lines) + "\n"


def best_strategy_row(table: SweepTable) -> str:
    """The f* row as one space-separated line, e.g. "f2 f2 f3"."""
    return " ".join(strategy_name(h) for h in table.best_strategies)


def render_regions(
    regions: LambdaRegionSet,
    row_labels: tuple[str, ...] = (),
    precision: int = DEFAULT_PRECISION,
) -> str:
    """One line per region: strategy, its label, exact interval, decimal ends."""
    lines = [_line(["strategy", "label", "region", "from", "to"])]
    for region in regions.regions:
        label = row_labels[region.strategy] if region.strategy < len(row_labels) else ""
        lines.append(
            _line(
                [
                    strategy_name(region.strategy),
                    label,
                    f"[{region.lo}, {region.hi}]",
                    format_decimal(region.lo, precision),
                    format_decimal(region.hi, precision),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _strategy_text(index: int, matrix: PayoffMatrix | None) -> str:
    if matrix is not None and index < len(matrix.row_labels):
        return f"{strategy_name(index)} ({matrix.row_labels[index]})"
    return strategy_name(index)


def render_profile(
    profile: RiskProfile,
    tree: DecisionTree,
    matrix: PayoffMatrix | None = None,
    precision: int = DEFAULT_PRECISION,
) -> str:
    """Human-readable estimate report."""
    lines = ["Observed decisions:"]
    for tally in profile.inference.tallies:
        labels = tree.alternatives[tally.state]
        counts = ", ".join(
            f"{label}={count}" for label, count in zip(labels, tally.counts, strict=True)
        )
        if tally.inferred is None:
            verdict = "unobserved"
        else:
            verdict = labels[tally.inferred] + (" (tie)" if tally.ambiguous else "")
        lines.append(f"  {tally.state}: {counts} -> {verdict}")

    if profile.strategy_index is not None:
        lines.append(f"Strategy: {_strategy_text(profile.strategy_index, matrix)}")
    else:
        completion = ", ".join(strategy_name(h) for h in profile.inference.completion)
        lines.append(f"Strategy: partial; consistent with {completion}")

    lines.append(f"Status: {profile.status}")
    lines.append(f"Estimate: {profile.estimate.describe()}")
    if profile.fallback_lambda is not None:
        lines.append(
            f"Closest λ̂: {profile.fallback_lambda} for "
            f"{_strategy_text(profile.fallback_strategy or 0, matrix)} "
            f"(regret {profile.fallback_regret})"
        )
    if profile.expected_payment is not None:
        lines.append(
            f"Expected payment: {profile.expected_payment} "
            f"({format_decimal(profile.expected_payment, precision)})"
        )
    if profile.mean_payment is not None:
        lines.append(
            f"Observed mean payment: {profile.mean_payment} "
            f"({format_decimal(profile.mean_payment, precision)})"
        )
    return "\n".join(lines) + "\n"


def _optional(value: Fraction | None) -> str | None:
    return format_rational(value) if value is not None else None


def profile_to_dict(profile: RiskProfile, tree: DecisionTree) -> dict[str, Any]:
    """JSON-ready profile; rationals as "p/q" strings, strategies 1-based names."""
    estimate = profile.estimate
    return {
        "tree": tree.name,
        "status": profile.status,
        "strategy": (
            strategy_name(profile.strategy_index)
            if profile.strategy_index is not None
            else None
        ),
        "completion": [strategy_name(h) for h in profile.inference.completion],
        "decisions": {
            t.state: {
                "counts": dict(zip(tree.alternatives[t.state], t.counts, strict=True)),
                "inferred": (
                    tree.alternatives[t.state][t.inferred] if t.inferred is not None else None
                ),
                "ambiguous": t.ambiguous,
            }
            for t in profile.inference.tallies
        },
        "estimate": {
            "mode": estimate.mode,
            "text": estimate.describe(),
            "intervals": [
                {
                    "lo": format_rational(i.lo),
                    "hi": format_rational(i.hi),
                    "lo_closed": i.lo_closed,
                    "hi_closed": i.hi_closed,
                }
                for i in estimate.intervals
            ],
            "points": [format_rational(p) for p in estimate.points],
        },
        "fallback": (
            {
                "lambda": _optional(profile.fallback_lambda),
                "regret": _optional(profile.fallback_regret),
                "strategy": strategy_name(profile.fallback_strategy or 0),
            }
            if profile.fallback_lambda is not None
            else None
        ),
        "expected_payment": _optional(profile.expected_payment),
        "mean_payment": _optional(profile.mean_payment),
    }


def render_profile_json(profile: RiskProfile, tree: DecisionTree) -> str:
    """Indented JSON of :func:`profile_to_dict`."""
    return json.dumps(profile_to_dict(profile, tree), indent=2, ensure_ascii=False) + "\n"
