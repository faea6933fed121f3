# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Tree, matrix and log documents.

- Tree: UTF-8 JSON with ``name``, ``stage1`` (``[{id, decision}]``),
  ``alternatives`` (state → labels), ``stage2`` (ids), ``payoff``
  (state → label → rationals in stage-2 order) and optional ``p1``/``p2``.
- Matrix: CSV; header is ``strategy`` then compound-state labels, each row a
  strategy label then its cells.
- Log: CSV with header ``index,step1,decision,step3,payment``.

Rationals are read from integers, decimals or "p/q" strings. Serializers
always write "p/q", so parse(serialize(x)) == x.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import Decimal
from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, BeforeValidator, ConfigDict, ValidationError

from hurwicz_profile.errors import (
    DocumentParseError,
    LogConsistencyError,
    MissingPayoffError,
    TreeValidationError,
    UnknownObservationError,
)
from hurwicz_profile.model import (
    DecisionTree,
    PayoffKey,
    Stage1State,
    format_rational,
    parse_rational,
    path_payoff,
    validate_tree,
)
from hurwicz_profile.normalizer import PayoffMatrix
from hurwicz_profile.simulator import ObservationLog, ObservationRecord

LOG_HEADER = ["index", "step1", "decision", "step3", "payment"]

RationalField = Annotated[Fraction, BeforeValidator(parse_rational)]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


class Stage1Entry(_Document):
    id: str
    decision: bool = True


class TreeDocument(_Document):
    """Schema of the JSON tree document."""

    name: str = "tree"
    stage1: list[Stage1Entry]
    alternatives: dict[str, list[str]]
    stage2: list[str]
    payoff: dict[str, dict[str, list[RationalField]]]
    p1: dict[str, RationalField] | None = None
    p2: dict[str, RationalField] | None = None


def _first_error(e: ValidationError) -> tuple[str, str]:
    err = e.errors()[0]
    return ".".join(str(part) for part in err["loc"]), err["msg"]


def parse_tree(text: str, source: str = "tree document") -> DecisionTree:
    """Parse and validate a JSON tree document.

    Raises:
        DocumentParseError: Malformed JSON or schema mismatch (line / field)
        MissingPayoffError: A required payoff cell is absent
        TreeValidationError: The tree breaks a structural invariant
    """
    try:
        raw = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as e:
        raise DocumentParseError(source, e.msg, line=e.lineno) from e
    try:
        doc = TreeDocument.model_validate(raw)
    except ValidationError as e:
        field, reason = _first_error(e)
        raise DocumentParseError(source, reason, field=field) from e

    decision_ids = [entry.id for entry in doc.stage1 if entry.decision]
    for first, by_label in doc.payoff.items():
        if first not in decision_ids:
            raise DocumentParseError(
                source, f"payoff given for non-decision state {first!r}", field=f"payoff.{first}"
            )
        for label in by_label:
            if label not in doc.alternatives.get(first, []):
                raise DocumentParseError(
                    source,
                    f"unknown alternative {label!r}",
                    field=f"payoff.{first}.{label}",
                )

    payoff: dict[PayoffKey, Fraction] = {}
    for first in decision_ids:
        for alt, label in enumerate(doc.alternatives.get(first, [])):
            values = doc.payoff.get(first, {}).get(label)
            if values is None:
                if doc.stage2:
                    raise MissingPayoffError(first, label, doc.stage2[0])
                continue
            for position, second in enumerate(doc.stage2):
                if position >= len(values):
                    raise MissingPayoffError(first, label, second)
                payoff[(first, alt, second)] = values[position]
            if len(values) > len(doc.stage2):
                raise DocumentParseError(
                    source,
                    f"{len(values)} payoffs for {len(doc.stage2)} stage-2 states",
                    field=f"payoff.{first}.{label}",
                )

    tree = DecisionTree(
        name=doc.name,
        stage1=tuple(Stage1State(id=e.id, decision=e.decision) for e in doc.stage1),
        alternatives={k: tuple(v) for k, v in doc.alternatives.items()},
        stage2=tuple(doc.stage2),
        payoff=payoff,
        p1=doc.p1,
        p2=doc.p2,
    )
    report = validate_tree(tree)
    if not report.ok:
        raise TreeValidationError(report)
    return tree


def serialize_tree(tree: DecisionTree) -> str:
    """JSON document for ``tree``; rationals written as "p/q"."""
    doc: dict[str, Any] = {
        "name": tree.name,
        "stage1": [{"id": s.id, "decision": s.decision} for s in tree.stage1],
        "alternatives": {k: list(v) for k, v in tree.alternatives.items()},
        "stage2": list(tree.stage2),
        "payoff": {
            first: {
                label: [
                    format_rational(tree.payoff[(first, alt, second)])
                    for second in tree.stage2
                ]
                for alt, label in enumerate(tree.alternatives.get(first, ()))
            }
            for first in tree.decision_states
        },
    }
    if tree.p1 is not None:
        doc["p1"] = {k: format_rational(v) for k, v in tree.p1.items()}
    if tree.p2 is not None:
        doc["p2"] = {k: format_rational(v) for k, v in tree.p2.items()}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _csv_rows(text: str, source: str) -> list[tuple[int, list[str]]]:
    reader = csv.reader(io.StringIO(text))
    try:
        return [
            (reader.line_num, row) for row in reader if any(cell.strip() for cell in row)
        ]
    except csv.Error as e:
        raise DocumentParseError(source, str(e), line=reader.line_num) from e


def _rational_cell(source: str, text: str, line: int, field: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise DocumentParseError(source, str(e), line=line, field=field) from e


def parse_matrix(text: str, source: str = "matrix file") -> PayoffMatrix:
    """Parse a CSV payoff matrix (no tree needed)."""
    rows = _csv_rows(text, source)
    if not rows:
        raise DocumentParseError(source, "empty document", line=1)
    header_line, header = rows[0]
    column_labels = tuple(cell.strip() for cell in header[1:])
    if not column_labels:
        raise DocumentParseError(source, "no state columns", line=header_line)
    if len(set(column_labels)) != len(column_labels):
        raise DocumentParseError(source, "duplicate state labels", line=header_line)

    row_labels: list[str] = []
    cells: list[tuple[Fraction, ...]] = []
    for line, row in rows[1:]:
        if len(row) != len(column_labels) + 1:
            raise DocumentParseError(
                source, f"expected {len(column_labels) + 1} cells, got {len(row)}", line=line
            )
        label = row[0].strip()
        if label in row_labels:
            raise DocumentParseError(source, f"duplicate strategy {label!r}", line=line)
        row_labels.append(label)
        cells.append(
            tuple(
                _rational_cell(source, cell, line, column)
                for cell, column in zip(row[1:], column_labels, strict=True)
            )
        )
    if not cells:
        raise DocumentParseError(source, "no strategy rows", line=header_line)
    return PayoffMatrix(row_labels=tuple(row_labels), column_labels=column_labels, cells=tuple(cells))


def serialize_matrix(matrix: PayoffMatrix) -> str:
    """Raw CSV form of a matrix, cells as "p/q"."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["strategy", *matrix.column_labels])
    for label, row in zip(matrix.row_labels, matrix.cells, strict=True):
        writer.writerow([label, *(format_rational(cell) for cell in row)])
    return buffer.getvalue()


def parse_log(
    text: str,
    tree: DecisionTree | None = None,
    source: str = "log file",
    tree_name: str | None = None,
) -> ObservationLog:
    """Parse a CSV observation log.

    With a tree, decisions are alternative labels and every payment is checked
    against the tree; without one, decisions are alternative indices.

    The CSV carries no tree name. The log takes ``tree_name`` when given, else
    the tree's name, else "tree".

    Raises:
        DocumentParseError: Malformed CSV, bad header or non-consecutive indices
        UnknownObservationError: A record names a state the tree lacks
        LogConsistencyError: A payment differs from the tree's path payoff
    """
    rows = _csv_rows(text, source)
    if not rows:
        raise DocumentParseError(source, "empty document", line=1)
    header_line, header = rows[0]
    if [cell.strip() for cell in header] != LOG_HEADER:
        raise DocumentParseError(
            source, f"header must be {','.join(LOG_HEADER)}", line=header_line
        )

    records = []
    for line, row in rows[1:]:
        if len(row) != len(LOG_HEADER):
            raise DocumentParseError(source, f"expected 5 cells, got {len(row)}", line=line)
        index_text, first, decision_text, second, payment_text = (c.strip() for c in row)
        try:
            index = int(index_text)
        except ValueError as e:
            raise DocumentParseError(source, str(e), line=line, field="index") from e
        payment = _rational_cell(source, payment_text, line, "payment")

        if tree is None:
            try:
                decision = int(decision_text)
            except ValueError as e:
                raise DocumentParseError(source, str(e), line=line, field="decision") from e
        else:
            if first not in tree.decision_states:
                raise UnknownObservationError(index, f"{first!r} is not a decision state")
            if decision_text not in tree.alternatives[first]:
                raise UnknownObservationError(
                    index, f"state {first} has no alternative {decision_text!r}"
                )
            if second not in tree.stage2:
                raise UnknownObservationError(index, f"{second!r} is not a stage-2 state")
            decision = tree.alternatives[first].index(decision_text)
            expected = path_payoff(tree, first, decision, second)
            if expected != payment:
                raise LogConsistencyError(index, expected, payment)

        records.append(
            ObservationRecord(
                index=index, first=first, decision=decision, second=second, payment=payment
            )
        )

    try:
        return ObservationLog(
            records=tuple(records),
            tree_name=tree_name or (tree.name if tree is not None else "tree"),
        )
    except ValidationError as e:
        _, reason = _first_error(e)
        raise DocumentParseError(source, reason, field="index") from e


def serialize_log(log: ObservationLog, tree: DecisionTree | None = None) -> str:
    """CSV form of a log; decisions as labels when a tree is given."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(LOG_HEADER)
    for record in log.records:
        decision = (
            tree.alternatives[record.first][record.decision]
            if tree is not None
            else str(record.decision)
        )
        writer.writerow(
            [record.index, record.first, decision, record.second, format_rational(record.payment)]
        )
    return buffer.getvalue()
