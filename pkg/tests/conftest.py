import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))


@st.composite
def interlacing_lists(draw, max_n=12):
    """Random descending interlacing (minima, maxima) with distinct values."""
    n = draw(st.integers(1, max_n))
    values = draw(st.lists(st.integers(-10_000, 10_000), min_size=2 * n - 1,
                           max_size=2 * n - 1, unique=True))
    values = sorted((v / 100 for v in values), reverse=True)
    return values[0::2], values[1::2]


def random_pair(rng: np.random.Generator, n: int):
    values = np.sort(rng.normal(size=2 * n - 1))[::-1]
    return values[0::2], values[1::2]


_ACCEPTANCE = {}


@pytest.fixture
def acceptance_detail(request):
    def record(text):
        _ACCEPTANCE[request.node.nodeid] = [None, text]
    return record


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE.setdefault(report.nodeid, [None, ""])[0] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (outcome, detail) in sorted(_ACCEPTANCE.items()):
        name = nodeid.split("::")[-1]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  {detail}")
