from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from dpcolor.graph import Graph


@st.composite
def simple_graphs(draw, max_n: int = 8, min_n: int = 1):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, keep in zip(pairs, mask) if keep))


@st.composite
def multigraphs(draw, max_n: int = 5, max_t: int = 3):
    n = draw(st.integers(1, max_n))
    edges = []
    for p in combinations(range(n), 2):
        edges += [p] * draw(st.integers(0, max_t))
    edges = draw(st.permutations(edges))
    return Graph(n, tuple(edges), simple=False)


from hypothesis import settings as _settings

_settings.register_profile("default", deadline=None)
_settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
