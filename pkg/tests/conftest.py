import pytest
from hypothesis import strategies as st

from exclusivity.graph import Graph, make_circulant, make_cycle, make_prism, make_shrikhande_complement

# filled by test_acceptance, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture(scope="session")
def ci8():
    return make_circulant(8, {1, 4})


@pytest.fixture(scope="session")
def c5():
    return make_cycle(5)


@pytest.fixture(scope="session")
def prism():
    return make_prism()


@pytest.fixture(scope="session")
def cs():
    return make_shrikhande_complement()
