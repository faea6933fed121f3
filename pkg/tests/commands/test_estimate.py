# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Tests for the estimate subcommand."""

import json
from collections.abc import Callable
from pathlib import Path

import pytest

from hurwicz_profile.commands.cli import main

HEADER = "index,step1,decision,step3,payment\n"
# sends only in b: strategy 100, never selected
NEVER_SELECTED = HEADER + "1,b,1,a,1\n2,c,0,a,4\n3,d,0,a,4\n"


class TestEstimateCommand:
    """Tests for hurwicz-profile estimate."""

    def test_grid_default(self, tree_file: Path, log_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["estimate", "--tree", str(tree_file), "--log", str(log_file)]) == 0
        out = capsys.readouterr().out
        assert "Strategy: f3 (010)" in out
        assert "Estimate: λ ∈ {0.5, 0.6, 0.7}" in out

    def test_exact(self, tree_file: Path, log_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["estimate", "--tree", str(tree_file), "--log", str(log_file), "--exact"]) == 0
        assert "Estimate: λ ∈ (2/5, 4/5)" in capsys.readouterr().out

    def test_finer_step(self, tree_file: Path, log_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        argv = ["estimate", "--tree", str(tree_file), "--log", str(log_file), "--step", "1/5"]
        assert main(argv) == 0
        assert "Estimate: λ ∈ {0.6}" in capsys.readouterr().out

    def test_json(self, tree_file: Path, log_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        argv = ["estimate", "--tree", str(tree_file), "--log", str(log_file), "--exact", "--json"]
        assert main(argv) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["status"] == "identified"
        assert data["estimate"]["intervals"] == [
            {"lo": "2/5", "hi": "4/5", "lo_closed": False, "hi_closed": False}
        ]

    def test_non_rationalizable(
        self, tree_file: Path, write_file: Callable[[str, str], Path], capsys: pytest.CaptureFixture[str]
    ) -> None:
        log = write_file("odd.csv", NEVER_SELECTED)
        assert main(["estimate", "--tree", str(tree_file), "--log", str(log), "--exact"]) == 0
        captured = capsys.readouterr()
        assert "Status: non-rationalizable" in captured.out
        assert "Closest λ̂: 4/5 for f5 (100) (regret 12/5)" in captured.out
        assert "never selected" in captured.err

    def test_strict_exit_code(
        self, tree_file: Path, write_file: Callable[[str, str], Path]
    ) -> None:
        log = write_file("odd.csv", NEVER_SELECTED)
        assert main(["estimate", "--tree", str(tree_file), "--log", str(log), "--strict"]) == 2

    def test_strict_passes_when_rationalizable(self, tree_file: Path, log_file: Path) -> None:
        assert main(["estimate", "--tree", str(tree_file), "--log", str(log_file), "--strict"]) == 0

    def test_payment_mismatch(
        self, tree_file: Path, write_file: Callable[[str, str], Path], capsys: pytest.CaptureFixture[str]
    ) -> None:
        log = write_file("bad.csv", HEADER + "1,c,1,d,9\n")
        assert main(["estimate", "--tree", str(tree_file), "--log", str(log)]) == 1
        assert "records payment 9, tree pays 8" in capsys.readouterr().err

    def test_log_not_utf8(
        self, tree_file: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        log = tmp_path / "log.csv"
        log.write_bytes(HEADER.encode() + b"1,c,1,\xff,3\n")
        assert main(["estimate", "--tree", str(tree_file), "--log", str(log)]) == 1
        err = capsys.readouterr().err
        assert "Failed to parse" in err
        assert "Unexpected error" not in err

    def test_missing_log(self, tree_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["estimate", "--tree", str(tree_file), "--log", "nope.csv"]) == 1
        assert "Observation log not found" in capsys.readouterr().err

    def test_closed_loop(self, tree_file: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """simulate at λ = 7/10, then estimate recovers an interval containing it."""
        log = tmp_path / "sim.csv"
        argv = ["simulate", "--tree", str(tree_file), "--lambda", "7/10", "--n", "200", "--seed", "1", "--out", str(log)]
        assert main(argv) == 0
        assert main(["estimate", "--tree", str(tree_file), "--log", str(log), "--exact", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["strategy"] == "f3"
        assert data["estimate"]["text"] == "λ ∈ (2/5, 4/5)"
