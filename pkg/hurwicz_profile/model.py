# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Domain types for two-stage decision trees.

A tree has three levels: nature picks a first-stage state, the decision taker
picks an alternative (only in decision-relevant states), and nature picks a
second-stage state. Leaves carry exact rational payoffs.

Types are frozen pydantic models; invariants are checked by
:func:`validate_tree` rather than at construction so that a malformed tree
can be reported field by field.

Usage:
    from hurwicz_profile.model import paper_fixture, path_payoff

    tree = paper_fixture()
    path_payoff(tree, "c", 1, "d")  # Fraction(8, 1)
"""

from __future__ import annotations

from collections.abc import Iterable
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from hurwicz_profile.errors import PayoffKeyError

StateId = str
Rational = Fraction
PayoffKey = tuple[StateId, int, StateId]


def parse_rational(value: object) -> Fraction:
    """Convert an integer, decimal or "p/q" spelling to an exact Fraction.

    Floats are rejected: they cannot carry the decimal the user meant.

    Args:
        value: int, Fraction, Decimal or string

    Returns:
        Fraction in lowest terms

    Raises:
        ValueError: If the value cannot be read as a rational
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, Fraction | int):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"not a rational: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                return Fraction(text)
            return Fraction(Decimal(text))
        except (ValueError, ZeroDivisionError, InvalidOperation) as e:
            raise ValueError(f"not a rational: {value!r}") from e
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Raw "p/q" spelling, used by every lossless serializer."""
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, precision: int) -> str:
    """Fixed-point text, rounded half-to-even, locale-independent.

    >>> format_decimal(Fraction(59, 10), 1)
    '5.9'
    >>> format_decimal(Fraction(10), 1)
    '10.0'
    """
    scaled = round(value * 10**precision)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**precision)
    if precision == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{precision}d}"


def exact_decimal(value: Fraction) -> str:
    """Shortest exact decimal text when one exists, "p/q" otherwise.

    >>> exact_decimal(Fraction(1, 20))
    '0.05'
    >>> exact_decimal(Fraction(1))
    '1.0'
    """
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return str(value)
    return format_decimal(value, max(twos, fives, 1))


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class Stage1State(_Frozen):
    """First-stage nature outcome; only decision states offer a choice."""

    id: StateId
    decision: bool = True


class Strategy(_Frozen):
    """One alternative index per decision-relevant state, in declaration order."""

    choices: tuple[int, ...]

    def choice_at(self, tree: DecisionTree, first: StateId) -> int:
        """Alternative this strategy takes in decision state ``first``."""
        try:
            position = tree.decision_states.index(first)
        except ValueError:
            raise PayoffKeyError("first", first) from None
        return self.choices[position]

    def label(self, tree: DecisionTree) -> str:
        """Concatenated alternative labels, e.g. "010"."""
        return "".join(
            tree.alternatives[state][choice]
            for state, choice in zip(tree.decision_states, self.choices, strict=True)
        )


class CompoundState(_Frozen):
    """Column of the normal form: a (decision state, stage-2 state) pair."""

    first: StateId
    second: StateId

    @property
    def label(self) -> str:
        return f"{self.first}{self.second}"


class DecisionTree(_Frozen):
    """Chance → decision → chance tree with rational payoffs at the leaves."""

    name: str = "tree"
    stage1: tuple[Stage1State, ...]
    alternatives: dict[StateId, tuple[str, ...]]
    stage2: tuple[StateId, ...]
    payoff: dict[PayoffKey, Fraction]
    p1: dict[StateId, Fraction] | None = None
    p2: dict[StateId, Fraction] | None = None

    @property
    def decision_states(self) -> tuple[StateId, ...]:
        """Decision-relevant first-stage states, in declaration order."""
        return tuple(s.id for s in self.stage1 if s.decision)

    @property
    def stage1_ids(self) -> tuple[StateId, ...]:
        return tuple(s.id for s in self.stage1)

    def alternative_count(self, first: StateId) -> int:
        return len(self.alternatives.get(first, ()))

    def alternative_index(self, first: StateId, label: str) -> int:
        """Index of alternative ``label`` in decision state ``first``."""
        if first not in self.decision_states:
            raise PayoffKeyError("first", first)
        try:
            return self.alternatives[first].index(label)
        except ValueError:
            raise PayoffKeyError("alternative", label) from None

    def has_probabilities(self) -> bool:
        return self.p1 is not None and self.p2 is not None


class Violation(_Frozen):
    """One failed invariant, naming the field and (when relevant) the state."""

    field: str
    message: str
    state: str | None = None

    def __str__(self) -> str:
        where = f" [{self.state}]" if self.state is not None else ""
        return f"{self.field}{where}: {self.message}"


class ValidationReport(_Frozen):
    violations: tuple[Violation, ...] = Field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def messages(self) -> list[str]:
        return [v.message for v in self.violations]


def _duplicates(ids: Iterable[str]) -> list[str]:
    seen: set[str] = set()
    dups: list[str] = []
    for state_id in ids:
        if state_id in seen and state_id not in dups:
            dups.append(state_id)
        seen.add(state_id)
    return dups


def _check_probabilities(
    field: str, probs: dict[StateId, Fraction], ids: tuple[StateId, ...]
) -> list[Violation]:
    violations = []
    for state_id in probs:
        if state_id not in ids:
            violations.append(Violation(field=field, state=state_id, message="unknown state"))
    for state_id in ids:
        if state_id not in probs:
            violations.append(
                Violation(field=field, state=state_id, message="missing probability")
            )
        elif probs[state_id] < 0:
            violations.append(
                Violation(field=field, state=state_id, message="negative probability")
            )
    if sum(probs.values(), Fraction(0)) != 1:
        violations.append(Violation(field=field, message="probabilities do not sum to 1"))
    return violations


def validate_tree(tree: DecisionTree) -> ValidationReport:
    """Check every DecisionTree invariant.

    Args:
        tree: Tree to check

    Returns:
        Report that is ``ok`` iff all invariants hold; each violation names
        the offending field and state
    """
    violations: list[Violation] = []

    for state_id in tree.stage1_ids:
        if not state_id:
            violations.append(Violation(field="stage1", message="empty state id"))
    for state_id in _duplicates(tree.stage1_ids):
        violations.append(Violation(field="stage1", state=state_id, message="duplicate state id"))
    for state_id in tree.stage2:
        if not state_id:
            violations.append(Violation(field="stage2", message="empty state id"))
    for state_id in _duplicates(tree.stage2):
        violations.append(Violation(field="stage2", state=state_id, message="duplicate state id"))

    if not tree.decision_states:
        violations.append(Violation(field="stage1", message="no decision states"))
    if not tree.stage2:
        violations.append(Violation(field="stage2", message="no stage-2 states"))

    for state_id in tree.alternatives:
        if state_id not in tree.decision_states:
            violations.append(
                Violation(
                    field="alternatives",
                    state=state_id,
                    message="alternatives given for a non-decision state",
                )
            )

    for first in tree.decision_states:
        labels = tree.alternatives.get(first, ())
        if not labels:
            violations.append(
                Violation(field="alternatives", state=first, message="no alternatives")
            )
        for label in _duplicates(labels):
            violations.append(
                Violation(
                    field="alternatives",
                    state=first,
                    message=f"duplicate alternative label {label!r}",
                )
            )
        for alt in range(len(labels)):
            for second in tree.stage2:
                if (first, alt, second) not in tree.payoff:
                    violations.append(
                        Violation(
                            field="payoff",
                            state=first,
                            message=f"missing payoff for ({first}, {labels[alt]}, {second})",
                        )
                    )

    for first, alt, second in tree.payoff:
        if (
            first not in tree.decision_states
            or not 0 <= alt < tree.alternative_count(first)
            or second not in tree.stage2
        ):
            violations.append(
                Violation(
                    field="payoff",
                    state=first,
                    message=f"payoff entry ({first}, {alt}, {second}) is outside the tree",
                )
            )

    if tree.p1 is not None:
        violations.extend(_check_probabilities("p1", tree.p1, tree.stage1_ids))
    if tree.p2 is not None:
        violations.extend(_check_probabilities("p2", tree.p2, tree.stage2))

    return ValidationReport(violations=tuple(violations))


def path_payoff(tree: DecisionTree, first: StateId, alt: int, second: StateId) -> Fraction:
    """Payoff of the leaf reached by (first-stage state, alternative, second-stage state).

    Raises:
        PayoffKeyError: naming the component that is not part of the tree
    """
    if first not in tree.decision_states:
        raise PayoffKeyError("first", first)
    if not 0 <= alt < tree.alternative_count(first):
        raise PayoffKeyError("alternative", alt)
    if second not in tree.stage2:
        raise PayoffKeyError("second", second)
    return tree.payoff[(first, alt, second)]


def paper_fixture() -> DecisionTree:
    """The rescue-robot dispatch example: hold (0) or send (1) an executor robot.

    First stage: a (no work, no decision), b, c, d (ascending work scope).
    Holding pays 4 whatever happens; sending pays according to the scope the
    robot actually finds at the second stage.
    """
    states = ("a", "b", "c", "d")
    send = {
        "b": (1, 2, 3, 4),
        "c": (3, 5, 6, 8),
        "d": (0, 4, 7, 10),
    }
    payoff: dict[PayoffKey, Fraction] = {}
    for first, row in send.items():
        for second, value in zip(states, row, strict=True):
            payoff[(first, 0, second)] = Fraction(4)
            payoff[(first, 1, second)] = Fraction(value)

    probs = {
        "a": Fraction(3, 10),
        "b": Fraction(3, 10),
        "c": Fraction(3, 10),
        "d": Fraction(1, 10),
    }
    return DecisionTree(
        name="rs-control",
        stage1=(
            Stage1State(id="a", decision=False),
            Stage1State(id="b"),
            Stage1State(id="c"),
            Stage1State(id="d"),
        ),
        alternatives={first: ("0", "1") for first in ("b", "c", "d")},
        stage2=states,
        payoff=payoff,
        p1=dict(probs),
        p2=dict(probs),
    )
