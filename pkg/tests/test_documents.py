# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Tests for tree, matrix and log documents."""

import json
from fractions import Fraction

import pytest

from hurwicz_profile.documents import (
    parse_log,
    parse_matrix,
    parse_tree,
    serialize_log,
    serialize_matrix,
    serialize_tree,
)
from hurwicz_profile.errors import (
    DocumentParseError,
    LogConsistencyError,
    MissingPayoffError,
    TreeValidationError,
    UnknownObservationError,
)
from hurwicz_profile.model import DecisionTree
from hurwicz_profile.normalizer import PayoffMatrix
from hurwicz_profile.simulator import ObservationLog

MINIMAL_TREE = {
    "name": "minimal",
    "stage1": [{"id": "s", "decision": True}],
    "alternatives": {"s": ["go", "stay"]},
    "stage2": ["x", "y"],
    "payoff": {"s": {"go": [1, "7/10"], "stay": [0.5, "2"]}},
}


def _tree_text(**changes: object) -> str:
    doc = {**MINIMAL_TREE, **changes}
    return json.dumps(doc)


class TestParseTree:
    """Tests for JSON tree documents."""

    def test_round_trip_example(self, tree: DecisionTree) -> None:
        """The serialized example parses back to the same tree."""
        assert parse_tree(serialize_tree(tree)) == tree

    def test_rational_spellings(self) -> None:
        """Integers, decimals and p/q strings are all exact."""
        tree = parse_tree(_tree_text())
        assert tree.payoff[("s", 0, "y")] == Fraction(7, 10)
        assert tree.payoff[("s", 1, "x")] == Fraction(1, 2)
        assert tree.payoff[("s", 1, "y")] == Fraction(2)
        assert tree.name == "minimal"

    def test_decimal_payoff_is_exact(self) -> None:
        """0.1 in JSON is read as 1/10, not a binary float."""
        tree = parse_tree(_tree_text(payoff={"s": {"go": [0.1, 0], "stay": [0, 0]}}))
        assert tree.payoff[("s", 0, "x")] == Fraction(1, 10)

    def test_missing_payoff_names_cell(self) -> None:
        with pytest.raises(MissingPayoffError) as exc_info:
            parse_tree(_tree_text(payoff={"s": {"go": [1], "stay": [0, 0]}}))
        assert exc_info.value.cell == ("s", "go", "y")

    def test_missing_alternative_row(self) -> None:
        with pytest.raises(MissingPayoffError) as exc_info:
            parse_tree(_tree_text(payoff={"s": {"go": [1, 1]}}))
        assert exc_info.value.cell == ("s", "stay", "x")

    def test_too_many_payoffs(self) -> None:
        with pytest.raises(DocumentParseError) as exc_info:
            parse_tree(_tree_text(payoff={"s": {"go": [1, 1, 1], "stay": [0, 0]}}))
        assert exc_info.value.field == "payoff.s.go"

    def test_unknown_alternative_label(self) -> None:
        with pytest.raises(DocumentParseError) as exc_info:
            parse_tree(_tree_text(payoff={"s": {"go": [1, 1], "stay": [0, 0], "run": [2, 2]}}))
        assert exc_info.value.field == "payoff.s.run"

    def test_malformed_json_reports_line(self) -> None:
        with pytest.raises(DocumentParseError) as exc_info:
            parse_tree('{\n  "name": "x",\n  "stage1": [\n}')
        assert exc_info.value.line == 4

    def test_schema_mismatch_reports_field(self) -> None:
        with pytest.raises(DocumentParseError) as exc_info:
            parse_tree(_tree_text(stage2="x"))
        assert exc_info.value.field is not None
        assert exc_info.value.field.startswith("stage2")

    def test_bad_rational_reports_field(self) -> None:
        with pytest.raises(DocumentParseError) as exc_info:
            parse_tree(_tree_text(payoff={"s": {"go": ["abc", 1], "stay": [0, 0]}}))
        assert exc_info.value.field == "payoff.s.go.0"

    def test_unknown_key_rejected(self) -> None:
        with pytest.raises(DocumentParseError):
            parse_tree(_tree_text(extra=1))

    def test_invalid_probabilities(self) -> None:
        """Structural violations come back as a validation report."""
        with pytest.raises(TreeValidationError) as exc_info:
            parse_tree(_tree_text(p1={"s": "1/2"}))
        assert "probabilities do not sum to 1" in exc_info.value.report.messages()

    def test_serialized_form(self, tree: DecisionTree) -> None:
        """Every rational is written as a p/q string."""
        doc = json.loads(serialize_tree(tree))
        assert doc["payoff"]["c"]["1"] == ["3/1", "5/1", "6/1", "8/1"]
        assert doc["p1"]["d"] == "1/10"
        assert doc["stage1"][0] == {"id": "a", "decision": False}
        assert "a" not in doc["payoff"]


class TestMatrixDocuments:
    """Tests for CSV payoff matrices."""

    def test_round_trip(self, matrix: PayoffMatrix) -> None:
        parsed = parse_matrix(serialize_matrix(matrix))
        assert parsed.cells == matrix.cells
        assert parsed.row_labels == matrix.row_labels
        assert parsed.column_labels == matrix.column_labels

    def test_header(self, matrix: PayoffMatrix) -> None:
        assert serialize_matrix(matrix).splitlines()[0] == "strategy,ba,bb,bc,bd,ca,cb,cc,cd,da,db,dc,dd"

    def test_mixed_spellings(self) -> None:
        parsed = parse_matrix("strategy,s1,s2\nr1,1/2,0.25\nr2,3,-1\n")
        assert parsed.cells == ((Fraction(1, 2), Fraction(1, 4)), (Fraction(3), Fraction(-1)))

    def test_ragged_row(self) -> None:
        with pytest.raises(DocumentParseError) as exc_info:
            parse_matrix("strategy,s1,s2\nr1,1\n")
        assert exc_info.value.line == 2

    def test_bad_cell(self) -> None:
        with pytest.raises(DocumentParseError) as exc_info:
            parse_matrix("strategy,s1\nr1,x\n")
        assert (exc_info.value.line, exc_info.value.field) == (2, "s1")

    @pytest.mark.parametrize(
        "text",
        ["", "strategy\nr1\n", "strategy,s1\n", "strategy,s1,s1\nr1,1,2\n", "strategy,s1\nr,1\nr,2\n"],
    )
    def test_rejects(self, text: str) -> None:
        with pytest.raises(DocumentParseError):
            parse_matrix(text)

    def test_csv_reader_error(self) -> None:
        """A cell beyond the csv field-size limit is a parse error on its line."""
        with pytest.raises(DocumentParseError) as exc_info:
            parse_matrix("strategy,s1\nr1," + "1" * 200_000 + "\n")
        assert exc_info.value.line == 2


class TestLogDocuments:
    """Tests for CSV observation logs."""

    def test_round_trip_with_tree(self, tree: DecisionTree, table1_log: ObservationLog) -> None:
        text = serialize_log(table1_log, tree)
        assert parse_log(text, tree).records == table1_log.records

    def test_round_trip_without_tree(self, table1_log: ObservationLog) -> None:
        text = serialize_log(table1_log)
        assert parse_log(text, tree_name=table1_log.tree_name) == table1_log

    def test_tree_name_defaults(self, tree: DecisionTree, table1_log: ObservationLog) -> None:
        """The CSV has no name column; the tree or a placeholder supplies it."""
        assert parse_log(serialize_log(table1_log, tree), tree).tree_name == "rs-control"
        assert parse_log(serialize_log(table1_log)).tree_name == "tree"

    def test_format(self, tree: DecisionTree, table1_log: ObservationLog) -> None:
        lines = serialize_log(table1_log, tree).splitlines()
        assert lines[0] == "index,step1,decision,step3,payment"
        assert lines[4] == "4,c,1,d,8/1"
        assert len(lines) == 16

    def test_integer_payments_accepted(self, tree: DecisionTree) -> None:
        log = parse_log("index,step1,decision,step3,payment\n1,c,1,d,8\n", tree)
        assert log.records[0].payment == 8

    def test_payment_mismatch(self, tree: DecisionTree) -> None:
        with pytest.raises(LogConsistencyError) as exc_info:
            parse_log("index,step1,decision,step3,payment\n1,c,1,d,9\n", tree)
        assert exc_info.value.index == 1

    @pytest.mark.parametrize(
        "row",
        ["1,a,0,a,4", "1,b,2,a,4", "1,b,0,z,4"],
    )
    def test_unknown_observation(self, tree: DecisionTree, row: str) -> None:
        with pytest.raises(UnknownObservationError):
            parse_log(f"index,step1,decision,step3,payment\n{row}\n", tree)

    def test_bad_header(self) -> None:
        with pytest.raises(DocumentParseError) as exc_info:
            parse_log("idx,step1,decision,step3,payment\n")
        assert exc_info.value.line == 1

    def test_indices_must_be_consecutive(self) -> None:
        with pytest.raises(DocumentParseError) as exc_info:
            parse_log("index,step1,decision,step3,payment\n1,b,0,a,4\n3,b,0,a,4\n")
        assert exc_info.value.field == "index"

    def test_non_integer_decision_without_tree(self) -> None:
        with pytest.raises(DocumentParseError) as exc_info:
            parse_log("index,step1,decision,step3,payment\n1,b,send,a,4\n")
        assert exc_info.value.field == "decision"

    def test_header_only(self) -> None:
        assert len(parse_log("index,step1,decision,step3,payment\n")) == 0
