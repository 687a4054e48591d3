from itertools import product

import pytest
from hypothesis import given, settings

from conftest import multigraphs, simple_graphs
from dpcolor import oracles
from dpcolor.constructions import cube_graph, planar_bipartite_gadget
from dpcolor.graph import (
    EdgeColoring,
    Graph,
    GraphFormatError,
    chromatic_index_exact,
    complete_bipartite,
    complete_graph,
    complete_multigraph,
    cycle_graph,
    degeneracy,
    enumerate_proper_edge_colorings,
    format_graph,
    is_bipartite,
    line_graph,
    line_multigraph,
    parse_graph,
    path_graph,
    petersen_graph,
)


def test_parse_c4():
    g = parse_graph("graph 4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert g == cycle_graph(4)
    assert g.edges[3] == (0, 3)


def test_parse_multigraph_k22():
    g = parse_graph("# two parallel edges\nmultigraph 2 2\n0 1\n0 1\n")
    assert not g.simple
    assert g.multiplicity == {(0, 1): 2}


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("graph 3 3\n0 1\n1 2\n0 0\n", 4, "loop"),
        ("graph 3 2\n0 1\n1 0\n", 3, "duplicate"),
        ("graph 3 1\n0 3\n", 2, "out of range"),
        ("graph 3 1\n0 x\n", 2, "non-integer"),
        ("grph 3 1\n0 1\n", 1, "expected"),
        ("graph 3 2\n0 1\n", 2, "expected 2 edges"),
    ],
)
def test_parse_errors(text, line, fragment):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_multigraph_allows_duplicates_graph_does_not():
    assert parse_graph("multigraph 2 2\n0 1\n1 0\n").m == 2
    with pytest.raises(GraphFormatError):
        parse_graph("graph 2 2\n0 1\n1 0\n")


@given(multigraphs())
def test_format_parse_roundtrip(g):
    assert parse_graph(format_graph(g)) == g


def test_line_graph_examples():
    assert line_graph(cycle_graph(4)).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert line_graph(complete_multigraph(2, 2)) == Graph(2, ((0, 1),))
    oct_ = line_graph(complete_graph(4))
    # octahedron: 6 vertices, 4-regular, complement is a perfect matching
    assert oct_.n == 6 and oct_.m == 12
    assert all(oct_.degree(u) == 4 for u in range(6))


def test_line_multigraph_examples():
    assert line_multigraph(complete_multigraph(2, 3)).edge_multiset() == complete_multigraph(3, 2).edge_multiset()
    assert line_multigraph(cycle_graph(4)).edge_multiset() == cycle_graph(4).edge_multiset()
    assert line_multigraph(complete_multigraph(2, 2)).edges == ((0, 1), (0, 1))


@given(simple_graphs())
def test_line_graph_degrees(g):
    lg = line_graph(g)
    assert lg.n == g.m
    for e, (u, v) in enumerate(g.edges):
        assert lg.degree(e) == g.degree(u) + g.degree(v) - 2


def test_degeneracy_examples():
    for n in range(3, 9):
        assert degeneracy(cycle_graph(n))[0] == 2
    assert degeneracy(cube_graph())[0] == 3
    assert degeneracy(planar_bipartite_gadget().graph)[0] == 3
    assert degeneracy(complete_multigraph(3, 2))[0] == 4


def _back_degree(g, order):
    pos = {u: i for i, u in enumerate(order)}
    return max(
        (sum(pos[w] < pos[u] for e in g.incident[u] for w in g.edges[e] if w != u) for u in range(g.n)),
        default=0,
    )


@given(multigraphs(max_n=6))
def test_degeneracy_is_order_bound(g):
    d, order = degeneracy(g)
    assert sorted(order) == list(range(g.n))
    assert _back_degree(g, order) <= d <= g.max_degree()


def _connected(g):
    seen, stack = {0}, [0]
    while stack:
        for w in g.neighbors[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


@given(simple_graphs(min_n=2))
def test_degeneracy_strict_on_connected_irregular(g):
    if _connected(g) and not g.is_regular():
        assert degeneracy(g)[0] < g.max_degree()


def test_is_bipartite_examples():
    side = is_bipartite(cycle_graph(4))
    assert {u for u in range(4) if side[u] == side[0]} == {0, 2}
    assert is_bipartite(cycle_graph(5)) is None
    assert is_bipartite(planar_bipartite_gadget().graph) is not None


@given(simple_graphs())
def test_is_bipartite_matches_brute_force(g):
    side = is_bipartite(g)
    assert (side is not None) == oracles.two_colorable(g)
    if side is not None:
        assert all(side[u] != side[v] for u, v in g.edges)


def test_chromatic_index_examples():
    assert chromatic_index_exact(cycle_graph(4), 3) == 2
    assert chromatic_index_exact(complete_graph(4), 4) == 3
    assert chromatic_index_exact(petersen_graph(), 4) == 4
    assert chromatic_index_exact(petersen_graph(), 3) is None
    # odd regular order: d matchings cannot cover every edge
    assert chromatic_index_exact(cycle_graph(5), 2) is None
    assert chromatic_index_exact(cycle_graph(5), 3) == 3
    assert chromatic_index_exact(complete_bipartite(3, 3), 3) == 3


@settings(max_examples=40)
@given(simple_graphs(max_n=6))
def test_vizing_bound_always_reached(g):
    assert chromatic_index_exact(g, g.max_degree() + 1) is not None


def test_proper_edge_coloring_examples():
    assert list(enumerate_proper_edge_colorings(path_graph(2), 1)) == [EdgeColoring((0,), 1)]
    assert len(list(enumerate_proper_edge_colorings(path_graph(3), 2))) == 2
    p4 = [c.assignment for c in enumerate_proper_edge_colorings(cycle_graph(4).remove_edge(3), 2)]
    assert p4 == [(0, 1, 0), (1, 0, 1)]


def _naive_edge_colorings(g, d):
    out = []
    for a in product(range(d), repeat=g.m):
        if EdgeColoring(a, d).is_proper(g):
            out.append(a)
    return out


@settings(max_examples=60)
@given(multigraphs(max_n=4, max_t=2))
def test_edge_colorings_match_naive_filter(g):
    if g.m > 6:
        return
    for d in range(g.max_degree(), g.max_degree() + 2):
        got = [c.assignment for c in enumerate_proper_edge_colorings(g, d)]
        assert got == _naive_edge_colorings(g, d)


def test_complete_multigraph_counts():
    g = complete_multigraph(3, 2)
    assert (g.n, g.m, g.max_degree()) == (3, 6, 4)
    assert complete_multigraph(3, 1) == complete_graph(3)
    assert complete_multigraph(2, 4).multiplicity == {(0, 1): 4}


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(ValueError):
        Graph(2, ((0, 0),))
    with pytest.raises(ValueError):
        Graph(2, ((0, 1), (1, 0)))
