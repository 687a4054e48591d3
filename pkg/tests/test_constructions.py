from itertools import product

import pytest

from dpcolor import oracles
from dpcolor.constructions import (
    A, B, C1, C2, D1, D2, D3, D4,
    GADGETS,
    SWAP2,
    conjecture_probe,
    cube_cover_F,
    cube_graph,
    edge_cover_regular,
    missing_color_lemma_check,
    planar_bipartite_gadget,
    shannon_counterexample,
    twisted_cycle_cover,
)
from dpcolor.cover import Cover, validate_cover
from dpcolor.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    complete_multigraph,
    cycle_graph,
    degeneracy,
    is_bipartite,
    line_multigraph,
    path_graph,
    petersen_graph,
)
from dpcolor.solver import chi_dp, count_transversals, find_transversal, propagate_units


def test_twisted_cycle_examples():
    assert find_transversal(twisted_cycle_cover(4, 2)[1]) is not None
    assert find_transversal(twisted_cycle_cover(4, 2, SWAP2)[1]) is None
    for n in (3, 5, 7):
        assert find_transversal(twisted_cycle_cover(n, 2)[1]) is None


@pytest.mark.parametrize("n", range(3, 11))
@pytest.mark.parametrize("shift", [(0, 1), SWAP2], ids=["identity", "swap"])
def test_twisted_cycle_matches_brute_force(n, shift):
    _, cov = twisted_cycle_cover(n, 2, shift)
    assert validate_cover(cov).ok
    brute = sum(
        not any(p[u] == i and p[v] == j for u, i, v, j in cov.cross_edges)
        for p in product(range(2), repeat=n)
    )
    assert (find_transversal(cov) is not None) == (brute > 0)
    # closed walk around the cycle: colorable iff the twist parity matches n
    assert (brute > 0) == ((n % 2 == 0) == (shift == (0, 1)))


def test_cube_graph():
    q = cube_graph()
    assert q.m == 12 and all(q.degree(u) == 3 for u in range(8))
    assert is_bipartite(q) is not None
    assert degeneracy(q)[0] == 3
    ring = [(C1, D1), (D1, D2), (D2, B), (B, C2), (C2, D3), (D3, D4), (D4, A), (A, C1)]
    assert set(q.edges) >= {tuple(sorted(e)) for e in ring}


def test_cube_cover_f():
    f = cube_cover_F()
    assert validate_cover(f).ok
    assert f.fold is None and f.sizes == (1, 1, 3, 3, 3, 3, 3, 3)
    assert find_transversal(f) is None
    dom = propagate_units(f)
    assert [dom[u] for u in (A, B, C1, C2)] == [1, 1, 0b010, 0b010]
    assert [dom[u] for u in (D1, D2, D3, D4)] == [0b110] * 4


def test_cube_cover_inner_cycle_is_twisted_c4():
    # the surviving inner slots form the non-colorable twisted 4-cycle
    f = cube_cover_F()
    inner = {D1: 0, D2: 1, D3: 2, D4: 3}
    g = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    xs = {
        (inner[u], i - 1, inner[v], j - 1)
        for u, i, v, j in f.cross_edges
        if u in inner and v in inner
    }
    assert count_transversals(Cover(g, (2,) * 4, frozenset(xs))) == 0


def test_planar_bipartite_gadget_structure():
    gad = planar_bipartite_gadget()
    g, h = gad.graph, gad.cover
    assert (g.n, g.m) == (56, 108)
    assert is_bipartite(g) is not None
    assert validate_cover(h).ok and h.fold == 3
    assert g.degree(0) == g.degree(1) == 27
    assert degeneracy(g)[0] == 3


def test_planar_bipartite_gadget_each_copy_blocked():
    gad = planar_bipartite_gadget()
    h = gad.cover
    for (i, j), vmap in gad.copies.items():
        # fix x_i at a*, y_j at b*; the induced cover on Q_ij must be dead
        keep = {vmap[u]: u for u in range(8)}
        sizes = [1, 1] + [3] * 6
        slot_fix = {0: i, 1: j}
        xs = set()
        for u, s, v, t in h.cross_edges:
            if u in keep and v in keep:
                if (u in slot_fix and s != slot_fix[u]) or (v in slot_fix and t != slot_fix[v]):
                    continue
                s = 0 if u in slot_fix else s
                t = 0 if v in slot_fix else t
                xs.add((keep[u], s, keep[v], t))
        sub = Cover(cube_graph(), tuple(sizes), frozenset(xs))
        assert sub == cube_cover_F()
        assert find_transversal(sub) is None


@pytest.mark.parametrize(
    "g",
    [cycle_graph(4), cycle_graph(6), complete_graph(4), complete_bipartite(3, 3), petersen_graph()],
    ids=["C4", "C6", "K4", "K33", "Petersen"],
)
def test_edge_cover_regular_uncolorable(g):
    for uv in range(g.m):
        cov = edge_cover_regular(g, uv)
        assert validate_cover(cov).ok
        assert cov.fold == g.degree(0)
        assert find_transversal(cov) is None


def test_edge_cover_regular_errors():
    with pytest.raises(ValueError):
        edge_cover_regular(path_graph(3))
    with pytest.raises(ValueError):
        edge_cover_regular(Graph(2, ((0, 1),)))


def test_edge_cover_transversal_of_g_minus_uv_is_proper_coloring():
    # dropping the twisted class leaves a cover of Line(G - uv) whose
    # transversals are exactly proper d-edge-colorings of G - uv
    g = complete_graph(4)
    uv = 0
    cov = edge_cover_regular(g, uv)
    keep = [e for e in range(g.m) if e != uv]
    idx = {e: p for p, e in enumerate(keep)}
    lg_sub = Graph(len(keep), tuple(sorted({(idx[u], idx[v]) for u, _, v, _ in cov.cross_edges if uv not in (u, v)})))
    xs = {(idx[u], i, idx[v], j) for u, i, v, j in cov.cross_edges if uv not in (u, v)}
    sub = Cover(lg_sub, (3,) * len(keep), frozenset(xs))
    gp = g.remove_edge(uv)
    rows = oracles.naive_transversals(sub)
    assert len(rows) > 0
    for row in rows:
        for w in range(gp.n):
            cols = [row[e] for e in gp.incident[w]]
            assert len(cols) == len(set(cols))


@pytest.mark.parametrize("g", [cycle_graph(4), cycle_graph(6), complete_graph(4)], ids=["C4", "C6", "K4"])
def test_missing_color_lemma(g):
    assert all(missing_color_lemma_check(g, e) for e in range(g.m))


def test_shannon_counterexample():
    for d in (2, 3):
        g, claimed = shannon_counterexample(d)
        assert g == complete_multigraph(2, d) and claimed == 2 * d - 1
        assert line_multigraph(g).edge_multiset() == complete_multigraph(d, 2).edge_multiset()
    assert chi_dp(line_multigraph(complete_multigraph(2, 2))) == 3


def test_conjecture_probe_examples():
    r = conjecture_probe(complete_multigraph(2, 2))
    assert (r.chi_dp_line, r.bound, r.holds) == (2, 3, True)
    r = conjecture_probe(cycle_graph(4))
    assert (r.chi_dp_line, r.bound) == (3, 3)
    r = conjecture_probe(complete_multigraph(2, 3))
    assert (r.chi_dp_line, r.bound) == (3, 4)


def test_gadget_catalog_names():
    assert set(GADGETS) == {
        "twisted-cycle", "cube", "cube-cover-f", "planar-bipartite-4",
        "edge-cover-regular", "ktk", "shannon", "conjecture-probe",
    }
