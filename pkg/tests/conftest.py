import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_CRITERIA: list = []


@pytest.fixture
def criterion():
    """Record one pass/fail line for the acceptance summary, then assert."""

    def record(label: str, passed: bool, detail: str = "") -> None:
        _CRITERIA.append(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")
        print(_CRITERIA[-1])
        assert passed, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
