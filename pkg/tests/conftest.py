from __future__ import annotations

import pytest

from modrank.field import ff_make

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    """Collect one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  ({detail})"
        ACCEPTANCE_LINES.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3)]


@pytest.fixture(params=SMALL_FIELDS, ids=lambda pk: f"GF({pk[0]}^{pk[1]})")
def small_field(request):
    return ff_make(*request.param)
