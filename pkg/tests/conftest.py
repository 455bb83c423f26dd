from fractions import Fraction
from pathlib import Path

import pytest

from classical_mt import make_observable, make_state_space

DATA = Path(__file__).parent / "data"

H = Fraction(1, 2)

# Host observable written out by hand, rows = outcomes "1", "2", "3",
# columns = car behind A1, A2, A3.
HOST_MATRIX = [
    [0, 0, 0],
    [H, 0, 1],
    [H, 1, 0],
]


@pytest.fixture
def doors():
    return make_state_space(["A1", "A2", "A3"])


@pytest.fixture
def host(doors):
    return make_observable(doors, ["1", "2", "3"], HOST_MATRIX)


# --- acceptance summary ---------------------------------------------------

_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""

    def record(number, text):
        _CRITERIA.append((number, text, request.node))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, node in sorted(_CRITERIA, key=lambda c: c[0]):
        reports = [terminalreporter.stats.get(k, []) for k in ("passed", "failed", "error")]
        outcome = "PASS"
        for group, status in zip(reports, ("PASS", "FAIL", "FAIL")):
            if any(r.nodeid == node.nodeid and r.when == "call" for r in group):
                outcome = status
        terminalreporter.write_line(f"[{outcome}] criterion {number}: {text}")
