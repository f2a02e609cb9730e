import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from fullorient import kernels
from fullorient.graph import Graph

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parents[1] / "src" / "fullorient" / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(n), [e for e, keep in zip(pairs, mask) if keep])


# -- acceptance reporting ------------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    number, title = marker.args
    _criteria[number] = ("PASS" if rep.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section(f"acceptance criteria (kernel backend: {kernels.BACKEND})")
    for number in sorted(_criteria):
        status, title = _criteria[number]
        terminalreporter.write_line(f"[{status}] {number:2d}. {title}")
