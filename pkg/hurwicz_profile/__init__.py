# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""
hurwicz-profile: risk attitude of a decision taker under the Hurwicz criterion.

1. Normalize a chance → decision → chance tree into a payoff matrix
2. Sweep the pessimism parameter λ and partition [0, 1] into exact regions
3. Simulate a decision taker with a given λ or strategy
4. Estimate λ back from an observation log
"""

from importlib.metadata import PackageNotFoundError
from importlib.metadata import metadata as _metadata

try:
    _meta = _metadata("hurwicz-profile")
    __version__ = _meta["Version"]
    __author__ = _meta["Author-email"].split("<")[0].strip() if _meta["Author-email"] else ""
except PackageNotFoundError:  # pragma: no cover
    # running from a source checkout
    __version__ = "0.0.0"
    __author__ = ""

from hurwicz_profile.engine import (  # noqa: E402
    best_strategy,
    hurwicz_value,
    invert,
    strategy_regions,
    sweep,
)
from hurwicz_profile.estimator import estimate_lambda  # noqa: E402
from hurwicz_profile.model import DecisionTree, paper_fixture, validate_tree  # noqa: E402
from hurwicz_profile.normalizer import PayoffMatrix, normalize  # noqa: E402
from hurwicz_profile.simulator import simulate, table1_fixture  # noqa: E402

__all__ = [
    "DecisionTree",
    "PayoffMatrix",
    "__version__",
    "best_strategy",
    "estimate_lambda",
    "hurwicz_value",
    "invert",
    "normalize",
    "paper_fixture",
    "simulate",
    "strategy_regions",
    "sweep",
    "table1_fixture",
    "validate_tree",
]
