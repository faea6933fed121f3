# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Shared test fixtures and configuration.

This module provides fixtures for:
- The rescue-robot example tree, its payoff matrix and the published log
- Writing tree, matrix and log documents to temporary files
"""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

import pytest

from hurwicz_profile.documents import serialize_log, serialize_matrix, serialize_tree
from hurwicz_profile.model import DecisionTree, paper_fixture
from hurwicz_profile.normalizer import PayoffMatrix, normalize
from hurwicz_profile.simulator import ObservationLog, table1_fixture

# =============================================================================
# Example fixtures
# =============================================================================


@pytest.fixture
def tree() -> DecisionTree:
    """The rescue-robot dispatch tree."""
    return paper_fixture()


@pytest.fixture
def matrix(tree: DecisionTree) -> PayoffMatrix:
    """Its 8 × 12 normalized payoff matrix."""
    return normalize(tree)


@pytest.fixture
def table1_log() -> ObservationLog:
    """The fifteen published observations."""
    return table1_fixture()


# =============================================================================
# Document files
# =============================================================================


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write text to a file under tmp_path and return its path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def tree_file(write_file: Callable[[str, str], Path], tree: DecisionTree) -> Path:
    return write_file("tree.json", serialize_tree(tree))


@pytest.fixture
def matrix_file(write_file: Callable[[str, str], Path], matrix: PayoffMatrix) -> Path:
    return write_file("matrix.csv", serialize_matrix(matrix))


@pytest.fixture
def log_file(
    write_file: Callable[[str, str], Path],
    tree: DecisionTree,
    table1_log: ObservationLog,
) -> Path:
    return write_file("log.csv", serialize_log(table1_log, tree))


# =============================================================================
# Command-line isolation
# =============================================================================


@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> Path:
    """Run from an empty directory with no HURWICZ_* variables set.

    Keeps a developer's .hurwicz.conf or exported settings out of CLI tests.
    """
    for name in ("HURWICZ_GRID_STEP", "HURWICZ_STRATEGY_CAP", "HURWICZ_PRECISION", "HURWICZ_DEBUG"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("HOME", str(tmp_path))
    # wide stderr so rich does not wrap long paths in messages
    monkeypatch.setenv("COLUMNS", "200")
    monkeypatch.chdir(tmp_path)
    return tmp_path
