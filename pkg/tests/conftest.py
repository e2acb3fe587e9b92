import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from recpower import from_weighted  # noqa: E402


@pytest.fixture
def example_game():
    """The running example {8; 5,4,3,2}."""
    return from_weighted(8, [5, 4, 3, 2])


@pytest.fixture
def ss_game():
    return from_weighted(3, [2, 1, 1])



def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {k}. {line}")
