# SPDX-FileCopyrightText: 2025 Georges Martin <jrjsmrtn@gmail.com>
# SPDX-License-Identifier: Apache-2.0

"""Every command test runs in a clean environment."""

from pathlib import Path

import pytest


@pytest.fixture(autouse=True)
def _isolated(clean_env: Path) -> Path:
    return clean_env
