"""Shared test fixtures: acceptance-criterion reporting."""

import pytest

_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_report():
    """Record one [PASS]/[FAIL] line per acceptance criterion.

    The line is printed immediately (visible under ``pytest -s``) and
    replayed in the terminal summary of every run.
    """

    def record(name: str, ok: bool) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {name}"
        print(line)
        _LINES.append(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
