import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from arcconn.graph import MultiGraph, PointConfig

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@st.composite
def multigraphs(draw, max_vertices=6, max_edges=8, connected=True, loops=True):
    """Connected multigraphs: a random spanning tree plus random extra edges."""
    n = draw(st.integers(1 if loops else 2, max_vertices))
    edges = []
    if connected:
        for i in range(1, n):
            edges.append((draw(st.integers(0, i - 1)), i))
    budget = max(0, max_edges - len(edges))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=budget))
    edges += [(u, v) for u, v in extra if loops or u != v]
    if not edges:
        edges = [(0, 0)] if loops else [(0, 1)]
    return MultiGraph(range(n), edges)


@st.composite
def configs(draw, g: MultiGraph, max_total=4):
    eids = sorted(g.edges)
    picks = draw(st.lists(st.sampled_from(eids), min_size=1, max_size=max_total))
    return PointConfig.from_edges(picks)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES.append(f"criterion {number} [{status}] {title}" + (f": {detail}" if detail else ""))

    return record
