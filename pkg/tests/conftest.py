import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_LINES = {}


@pytest.fixture
def acceptance():
    """Record one summary line per acceptance criterion: acceptance(number, passed, detail)."""

    def record(number: int, passed: bool, detail: str):
        _LINES[number] = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}"
        print(_LINES[number])

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_LINES):
            terminalreporter.write_line(_LINES[k])
