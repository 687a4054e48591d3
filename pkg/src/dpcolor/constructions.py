"""Generators for the named graphs and covers: twisted cycles, the cube gadget,
the planar bipartite composite, the twisted edge cover of a regular graph, and
the multigraph examples."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .cover import Cover, full_cover
from .graph import (
    Graph,
    complete_multigraph,
    cycle_graph,
    enumerate_proper_edge_colorings,
    line_graph,
)

IDENTITY2 = (0, 1)
SWAP2 = (1, 0)


def twisted_cycle_cover(n: int, k: int, shift: Sequence[int] | None = None) -> tuple[Graph, Cover]:
    """Full k-fold cover of C_n: identity on edges 0..n-2, ``shift`` on the closing edge.

    The closing edge is stored as ``(0, n-1)``, so ``shift`` maps slots of vertex
    0 to slots of vertex n-1.
    """
    g = cycle_graph(n)
    shift = tuple(range(k)) if shift is None else tuple(shift)
    ident = tuple(range(k))
    return g, full_cover(g, k, [ident] * (n - 1) + [shift])


# Cube vertex indices.
A, B, C1, C2, D1, D2, D3, D4 = range(8)
CUBE_NAMES = ("a", "b", "c1", "c2", "d1", "d2", "d3", "d4")


def cube_graph() -> Graph:
    """The cube skeleton: 8-cycle c1 d1 d2 b c2 d3 d4 a plus chords c1b, d2d3, d1d4, ac2."""
    ring = [(C1, D1), (D1, D2), (D2, B), (B, C2), (C2, D3), (D3, D4), (D4, A), (A, C1)]
    chords = [(C1, B), (D2, D3), (D1, D4), (A, C2)]
    return Graph(8, tuple(ring + chords))


# Slots of the cube cover. L(a) = {x}, L(b) = {y}; in L(c1) and L(c2) slot 1 is
# z1 / z2, slot 0 is matched to x and slot 2 to y. In every L(d*), slot 0 is
# the node killed by the forcing chain and slots 1, 2 carry the inner cycle.
_X, _Y, _Z = 0, 0, 1
_CUBE_F_XEDGES = [
    (A, _X, C1, 0), (A, _X, C2, 0), (A, _X, D4, 0),
    (B, _Y, C1, 2), (B, _Y, C2, 2), (B, _Y, D2, 0),
    (C1, _Z, D1, 0), (C2, _Z, D3, 0),
    # inner 4-cycle d1 d2 d3 d4: identity on three edges, swap on d4d1
    (D1, 1, D2, 1), (D1, 2, D2, 2),
    (D2, 1, D3, 1), (D2, 2, D3, 2),
    (D3, 1, D4, 1), (D3, 2, D4, 2),
    (D1, 1, D4, 2), (D1, 2, D4, 1),
]
CUBE_F_SIZES = (1, 1, 3, 3, 3, 3, 3, 3)


def cube_cover_F() -> Cover:
    return Cover(cube_graph(), CUBE_F_SIZES, frozenset(_CUBE_F_XEDGES))


@dataclass(frozen=True)
class PlanarBipartiteGadget:
    graph: Graph
    cover: Cover
    # copy (i, j) -> gadget vertex for each cube vertex (a and b map to a*, b*)
    copies: dict[tuple[int, int], tuple[int, ...]]


def planar_bipartite_gadget() -> PlanarBipartiteGadget:
    """Nine cube copies sharing a* (vertex 0) and b* (vertex 1), with a 3-fold cover.

    Copy Q_ij uses x_i (slot i of L(a*)) and y_j (slot j of L(b*)); the other
    six vertices of each copy are numbered consecutively from 2.
    """
    q = cube_graph()
    edges: list[tuple[int, int]] = []
    xs = set()
    copies = {}
    nxt = 2
    for i in range(3):
        for j in range(3):
            vmap = [0, 1] + list(range(nxt, nxt + 6))
            nxt += 6
            copies[(i, j)] = tuple(vmap)
            edges += [(vmap[u], vmap[v]) for u, v in q.edges]
            slot_of_ab = {A: i, B: j}
            for u, s, v, t in _CUBE_F_XEDGES:
                s = slot_of_ab.get(u, s)
                t = slot_of_ab.get(v, t)
                xs.add((vmap[u], s, vmap[v], t))
    g = Graph(nxt, tuple(edges))
    return PlanarBipartiteGadget(g, Cover(g, (3,) * g.n, frozenset(xs)), copies)


def edge_cover_regular(g: Graph, uv: int = 0) -> Cover:
    """d-fold cover of Line(g) with no transversal, for d-regular ``g`` and d >= 2.

    Classes are ``{e} x Z_d``. Same-index matchings join edges meeting in
    ``g - uv`` and join ``uv`` to the other edges at ``u``; at ``v`` the
    matching is shifted, ``(uv, i) ~ (h, i + 1)``.
    """
    if not g.simple:
        raise ValueError("expected a simple graph")
    if not g.is_regular() or g.n == 0:
        raise ValueError("graph is not regular")
    d = g.degree(0)
    if d < 2:
        raise ValueError("need degree d >= 2")
    if not 0 <= uv < g.m:
        raise ValueError(f"edge id {uv} out of range")
    lg = line_graph(g)
    u, v = g.edges[uv]
    xs = set()
    for e, h in lg.edges:
        if uv not in (e, h):
            xs.update((e, i, h, i) for i in range(d))
    for h in g.incident[u]:
        if h != uv:
            xs.update((uv, i, h, i) for i in range(d))
    for h in g.incident[v]:
        if h != uv:
            xs.update((uv, i, h, (i + 1) % d) for i in range(d))
    return Cover(lg, (d,) * lg.n, frozenset(xs))


def missing_color_lemma_check(g: Graph, uv: int) -> bool:
    """In every proper d-edge-coloring of g - uv, u and v miss the same color."""
    d = g.degree(0)
    u, v = g.edges[uv]
    gp = g.remove_edge(uv)
    for f in enumerate_proper_edge_colorings(gp, d):
        mu, mv = f.missing(gp, u), f.missing(gp, v)
        if mu != mv:
            return False
    return True


def ktk(k: int, t: int) -> Graph:
    return complete_multigraph(k, t)


def shannon_counterexample(d: int) -> tuple[Graph, int]:
    """K^d_2 and the claimed DP-chromatic number 2d - 1 of its line multigraph."""
    if d < 2:
        raise ValueError("need d >= 2")
    return complete_multigraph(2, d), 2 * d - 1


@dataclass
class ProbeReport:
    chi_dp_line: int
    max_degree: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.chi_dp_line <= self.bound

    def __str__(self) -> str:
        verdict = "holds" if self.holds else "FAILS"
        return (f"chi_dp(Line(G)) = {self.chi_dp_line}, floor(3*Delta/2) = {self.bound} "
                f"(Delta = {self.max_degree}): {verdict} (exploratory)")


def conjecture_probe(g: Graph, **kw) -> ProbeReport:
    """Compare chi_dp(Line(G)) with floor(3 Delta(G) / 2) on one instance."""
    from .solver import chi_dp

    delta = g.max_degree()
    return ProbeReport(chi_dp(line_graph(g), **kw), delta, (3 * delta) // 2)


@dataclass(frozen=True)
class GadgetEntry:
    generator: Callable
    params: tuple[str, ...]
    claim: str


GADGETS: dict[str, GadgetEntry] = {
    "twisted-cycle": GadgetEntry(twisted_cycle_cover, ("n", "k", "shift"), "FG"),
    "cube": GadgetEntry(cube_graph, (), "QF"),
    "cube-cover-f": GadgetEntry(cube_cover_F, (), "QF"),
    "planar-bipartite-4": GadgetEntry(planar_bipartite_gadget, (), "PB4"),
    "edge-cover-regular": GadgetEntry(edge_cover_regular, ("graph", "uv"), "EC"),
    "ktk": GadgetEntry(ktk, ("k", "t"), "KT"),
    "shannon": GadgetEntry(shannon_counterexample, ("d",), "SH"),
    "conjecture-probe": GadgetEntry(conjecture_probe, ("graph",), "-"),
}
