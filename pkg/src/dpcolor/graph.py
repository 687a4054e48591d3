"""Simple graphs and loopless multigraphs on dense integer vertices.

Edges keep their input position as a permanent identifier, so structures
built on top of ``E(G)`` (line graphs, covers of line graphs) can refer back
to individual edges, including individual parallel edges.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graph text; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    simple: bool = True

    def __post_init__(self):
        norm = []
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} = ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"edge {e} is a loop at {u}")
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(norm))
        if self.simple and len(set(norm)) != len(norm):
            raise ValueError("duplicate edge in a simple graph")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        """Number of parallel edges per endpoint pair (u < v)."""
        return dict(Counter(self.edges))

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def degree(self, u: int) -> int:
        # counts parallel edges
        return len(self.incident[u])

    def max_degree(self) -> int:
        return max((self.degree(u) for u in range(self.n)), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def is_regular(self) -> bool:
        return len({self.degree(u) for u in range(self.n)}) <= 1

    def remove_edge(self, e: int) -> Graph:
        """Graph without edge ``e``; later edge ids shift down by one."""
        return Graph(self.n, self.edges[:e] + self.edges[e + 1:], self.simple)

    def edge_multiset(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def parse_graph(text: str) -> Graph:
    """Parse the ``graph``/``multigraph`` text format."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty input")
    graph, _ = _parse_graph_lines(lines, 0)
    if len(lines) > graph.m + 1:
        raise GraphFormatError("trailing content after edges", lines[graph.m + 1][0])
    return graph


def _parse_graph_lines(lines: list[tuple[int, str]], pos: int) -> tuple[Graph, int]:
    # Shared with the cover parser, which embeds a graph block.
    if pos >= len(lines):
        raise GraphFormatError("missing graph header")
    lineno, header = lines[pos]
    parts = header.split()
    if len(parts) != 3 or parts[0] not in ("graph", "multigraph"):
        raise GraphFormatError(f"expected 'graph <n> <m>' or 'multigraph <n> <m>', got {header!r}", lineno)
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise GraphFormatError("non-integer vertex or edge count", lineno) from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative count", lineno)
    simple = parts[0] == "graph"
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for k in range(m):
        if pos + 1 + k >= len(lines):
            raise GraphFormatError(f"expected {m} edges, found {k}", lines[-1][0])
        lineno, ln = lines[pos + 1 + k]
        toks = ln.split()
        if len(toks) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {ln!r}", lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {ln!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range in {ln!r}", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if simple and key in seen:
            raise GraphFormatError(f"duplicate edge {key} in simple graph", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, tuple(edges), simple), pos + 1 + m


def format_graph(g: Graph) -> str:
    kind = "graph" if g.simple else "multigraph"
    out = [f"{kind} {g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


# --- derived structures -----------------------------------------------------

def line_graph(g: Graph) -> Graph:
    """Simple graph on edge ids; two ids adjacent iff the edges meet."""
    edges = []
    for e, h in combinations(range(g.m), 2):
        if set(g.edges[e]) & set(g.edges[h]):
            edges.append((e, h))
    return Graph(g.m, tuple(edges), simple=True)


def line_multigraph(g: Graph) -> Graph:
    """Like :func:`line_graph`, but edges sharing both endpoints give a double edge."""
    edges = []
    for e, h in combinations(range(g.m), 2):
        shared = len(set(g.edges[e]) & set(g.edges[h]))
        edges += [(e, h)] * shared
    return Graph(g.m, tuple(edges), simple=False)


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Return ``(d, ordering)``.

    The peel repeatedly deletes a vertex of minimum remaining degree (parallel
    edges counted, ties to the lowest index). ``ordering`` is the reversed peel
    order: every vertex has at most ``d`` edges to vertices *earlier* in it,
    which is the order the greedy transversal consumes.
    """
    deg = [g.degree(u) for u in range(g.n)]
    alive = [True] * g.n
    peel: list[int] = []
    d = 0
    for _ in range(g.n):
        u = min((x for x in range(g.n) if alive[x]), key=lambda x: (deg[x], x))
        d = max(d, deg[u])
        alive[u] = False
        peel.append(u)
        for e in g.incident[u]:
            a, b = g.edges[e]
            w = b if a == u else a
            if alive[w]:
                deg[w] -= 1
    return d, peel[::-1]


def is_bipartite(g: Graph) -> list[int] | None:
    """Return a 0/1 side per vertex, or ``None`` if an odd cycle exists."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return side


@dataclass(frozen=True)
class EdgeColoring:
    assignment: tuple[int, ...]
    d: int

    def is_proper(self, g: Graph) -> bool:
        for u in range(g.n):
            cols = [self.assignment[e] for e in g.incident[u]]
            if len(cols) != len(set(cols)):
                return False
        return all(0 <= c < self.d for c in self.assignment)

    def missing(self, g: Graph, u: int) -> set[int]:
        return set(range(self.d)) - {self.assignment[e] for e in g.incident[u]}


def _edge_conflicts(g: Graph) -> list[list[int]]:
    conf: list[set[int]] = [set() for _ in range(g.m)]
    for u in range(g.n):
        for e, h in combinations(g.incident[u], 2):
            conf[e].add(h)
            conf[h].add(e)
    return [sorted(c) for c in conf]


def enumerate_proper_edge_colorings(g: Graph, d: int) -> Iterator[EdgeColoring]:
    """All proper edge colorings with colors ``0..d-1``, lexicographic by edge id."""
    conf = _edge_conflicts(g)
    col = [-1] * g.m

    def rec(e: int) -> Iterator[EdgeColoring]:
        if e == g.m:
            yield EdgeColoring(tuple(col), d)
            return
        used = {col[h] for h in conf[e] if h < e}
        for c in range(d):
            if c not in used:
                col[e] = c
                yield from rec(e + 1)
        col[e] = -1

    yield from rec(0)


def _edge_colorable(g: Graph, d: int, order: Sequence[int], conf: list[list[int]]) -> bool:
    col = [-1] * g.m

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        used = {col[h] for h in conf[e]}
        for c in range(d):
            if c not in used:
                col[e] = c
                if rec(i + 1):
                    return True
        col[e] = -1
        return False

    return rec(0)


def chromatic_index_exact(g: Graph, budget: int) -> int | None:
    """Least number of colors (at most ``budget``) in a proper edge coloring."""
    if g.m == 0:
        return 0
    conf = _edge_conflicts(g)
    order = sorted(range(g.m), key=lambda e: (-(g.degree(g.edges[e][0]) + g.degree(g.edges[e][1])), e))
    for d in range(g.max_degree(), budget + 1):
        if _edge_colorable(g, d, order, conf):
            return d
    return None


# --- named graphs -----------------------------------------------------------

def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def complete_multigraph(k: int, t: int) -> Graph:
    """K_k with every edge replaced by ``t`` parallel copies (consecutive ids)."""
    if k < 1 or t < 1:
        raise ValueError("need k >= 1 and t >= 1")
    edges = [(u, v) for u, v in combinations(range(k), 2) for _ in range(t)]
    return Graph(k, tuple(edges), simple=(t == 1))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))
