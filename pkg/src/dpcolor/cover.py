"""Covers ``(L, H)`` of a (multi)graph and the machinery around them.

A host node is addressed as ``(vertex, slot)``; the class ``L(u)`` is the set
of slots ``0..sizes[u]-1``. Classes are disjoint by construction and their
clique edges are implicit, so only cross edges between distinct classes are
stored, as quadruples ``(u, i, v, j)`` with ``u < v``.
"""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

from .graph import Graph, GraphFormatError, _parse_graph_lines, format_graph

XEdge = tuple[int, int, int, int]


@dataclass(frozen=True)
class Cover:
    base: Graph
    sizes: tuple[int, ...]
    cross_edges: frozenset[XEdge]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        norm = set()
        for u, i, v, j in self.cross_edges:
            norm.add((u, i, v, j) if u < v else (v, j, u, i))
        object.__setattr__(self, "cross_edges", frozenset(norm))

    @property
    def fold(self) -> int | None:
        """``k`` if every class has size ``k``, else ``None``."""
        s = set(self.sizes)
        return s.pop() if len(s) == 1 else None

    @cached_property
    def adjacency(self) -> list[list[dict[int, int]]]:
        """``adjacency[u][i][v]`` is the bitmask of slots of ``L(v)`` adjacent to ``(u, i)``."""
        adj: list[list[dict[int, int]]] = [[{} for _ in range(s)] for s in self.sizes]
        for u, i, v, j in self.cross_edges:
            adj[u][i][v] = adj[u][i].get(v, 0) | (1 << j)
            adj[v][j][u] = adj[v][j].get(u, 0) | (1 << i)
        return adj

    def pair_edges(self) -> dict[tuple[int, int], list[tuple[int, int]]]:
        out: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
        for u, i, v, j in sorted(self.cross_edges):
            out[(u, v)].append((i, j))
        return out

    def with_edge(self, xe: XEdge) -> Cover:
        return Cover(self.base, self.sizes, self.cross_edges | {xe})


@dataclass(frozen=True)
class Transversal:
    picks: tuple[int, ...]

    def is_valid(self, cov: Cover) -> bool:
        if len(self.picks) != cov.base.n:
            return False
        if any(not 0 <= p < s for p, s in zip(self.picks, cov.sizes)):
            return False
        return not any(self.picks[u] == i and self.picks[v] == j for u, i, v, j in cov.cross_edges)


# --- validation -------------------------------------------------------------

@dataclass
class ValidationReport:
    violations: list[tuple[str, tuple]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            lines = ["ok"]
        else:
            lines = [f"violation {cond}: {wit}" for cond, wit in self.violations]
        return "\n".join(lines + [f"warning: {w}" for w in self.warnings])


def validate_cover(cov: Cover) -> ValidationReport:
    rep = ValidationReport()
    g = cov.base
    if len(cov.sizes) != g.n:
        rep.violations.append(("sizes", (len(cov.sizes), g.n)))
        return rep
    for u, s in enumerate(cov.sizes):
        if s < 0:
            rep.violations.append(("sizes", (u, s)))
        elif s == 0:
            rep.warnings.append(f"empty class L({u}); no transversal can exist")
    in_range = []
    for xe in sorted(cov.cross_edges):
        u, i, v, j = xe
        if not (0 <= u < g.n and 0 <= v < g.n and 0 <= i < cov.sizes[u] and 0 <= j < cov.sizes[v]):
            rep.violations.append(("slot-range", xe))
        else:
            in_range.append(xe)
    mult = g.multiplicity
    deg: dict[tuple[int, int, int], int] = defaultdict(int)
    for xe in in_range:
        u, i, v, j = xe
        if (u, v) not in mult:
            rep.violations.append(("C3", xe))
            continue
        deg[(u, v, i)] += 1
        deg[(v, u, j)] += 1
    # Bipartite cross graphs split into t matchings iff max degree <= t (Konig).
    cond = "C4" if g.simple else "C4'"
    reported = set()
    for xe in in_range:
        u, i, v, j = xe
        t = mult.get((u, v))
        if t is None:
            continue
        for slot in ((u, v, i), (v, u, j)):
            if deg[slot] > t and slot not in reported:
                reported.add(slot)
                rep.violations.append((cond, xe))
    return rep


# --- constructors -----------------------------------------------------------

def cover_from_lists(g: Graph, lists: Sequence[Iterable[int]]) -> Cover:
    """Cover whose transversals are exactly the proper colorings from ``lists``.

    Slot ``i`` of ``u`` stands for the ``i``-th smallest color of ``lists[u]``.
    """
    if not g.simple:
        raise ValueError("list reduction expects a simple graph")
    srt = [sorted(set(l)) for l in lists]
    pos = [{c: i for i, c in enumerate(l)} for l in srt]
    xs = set()
    for u, v in g.edges:
        for c, i in pos[u].items():
            j = pos[v].get(c)
            if j is not None:
                xs.add((u, i, v, j))
    return Cover(g, tuple(len(l) for l in srt), frozenset(xs))


def full_cover(g: Graph, k: int, perms: Sequence[Sequence[int]]) -> Cover:
    """k-fold cover where edge ``e = (u, v)`` matches slot ``i`` of u to ``perms[e][i]`` of v."""
    if len(perms) != g.m:
        raise ValueError(f"need {g.m} permutations, got {len(perms)}")
    xs = set()
    for (u, v), p in zip(g.edges, perms):
        if sorted(p) != list(range(k)):
            raise ValueError(f"{p!r} is not a permutation of 0..{k - 1}")
        xs.update((u, i, v, p[i]) for i in range(k))
    return Cover(g, (k,) * g.n, frozenset(xs))


def random_cover(g: Graph, k: int, seed: int) -> Cover:
    rng = random.Random(seed)
    return full_cover(g, k, [rng.sample(range(k), k) for _ in range(g.m)])


def random_partial_cover(g: Graph, seed: int, max_size: int = 3, density: float = 0.7) -> Cover:
    """Cover with random class sizes in ``1..max_size`` and random partial matchings.

    A pair joined by ``t`` parallel edges gets the union of ``t`` partial matchings.
    """
    rng = random.Random(seed)
    sizes = tuple(rng.randint(1, max_size) for _ in range(g.n))
    xs = set()
    for u, v in g.edges:
        a, b = list(range(sizes[u])), list(range(sizes[v]))
        rng.shuffle(b)
        for i, j in zip(a, b):
            if rng.random() < density:
                xs.add((u, i, v, j))
    return Cover(g, sizes, frozenset(xs))


# --- normalization and enumeration -----------------------------------------

def spanning_forest(g: Graph) -> list[int]:
    """Edge ids of a spanning forest, greedily by edge id (Kruskal order)."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest = []
    for e, (u, v) in enumerate(g.edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
            forest.append(e)
    return forest


def _perfect_matching(k: int, pairs: Iterable[tuple[int, int]]) -> list[int] | None:
    # Kuhn's augmenting paths; slots tried in ascending order for determinism.
    nbr: list[list[int]] = [[] for _ in range(k)]
    for i, j in sorted(set(pairs)):
        nbr[i].append(j)
    match_r = [-1] * k

    def augment(i: int, seen: set[int]) -> bool:
        for j in nbr[i]:
            if j not in seen:
                seen.add(j)
                if match_r[j] < 0 or augment(match_r[j], seen):
                    match_r[j] = i
                    return True
        return False

    for i in range(k):
        if not augment(i, set()):
            return None
    out = [0] * k
    for j, i in enumerate(match_r):
        out[i] = j
    return out


def normalize_cover(cov: Cover, forest: Sequence[int] | None = None) -> Cover:
    """Relabel slots so every forest edge carries the identity matching.

    Roots (lowest vertex of each component) keep their labels; each child class
    inherits labels through the perfect matching on its forest edge. Raises
    ``ValueError`` unless the cover is full k-fold.
    """
    g = cov.base
    k = cov.fold
    if k is None:
        raise ValueError("cover is not k-fold")
    pairs = cov.pair_edges()
    for uv in g.multiplicity:
        if _perfect_matching(k, pairs.get(uv, [])) is None:
            raise ValueError(f"cover is not full: no perfect matching on pair {uv}")
    forest = spanning_forest(g) if forest is None else list(forest)
    tree_adj: dict[int, list[int]] = defaultdict(list)
    for e in forest:
        u, v = g.edges[e]
        tree_adj[u].append(v)
        tree_adj[v].append(u)
    relabel: list[list[int] | None] = [None] * g.n
    for root in range(g.n):
        if relabel[root] is not None:
            continue
        relabel[root] = list(range(k))
        stack = [root]
        while stack:
            p = stack.pop()
            for c in sorted(tree_adj[p]):
                if relabel[c] is not None:
                    continue
                a, b = min(p, c), max(p, c)
                m = _perfect_matching(k, pairs[(a, b)])
                if p == a:
                    mp = {m[i]: i for i in range(k)}  # slot of c -> slot of p
                else:
                    mp = {i: m[i] for i in range(k)}
                relabel[c] = [relabel[p][mp[j]] for j in range(k)]
                stack.append(c)
    xs = {(u, relabel[u][i], v, relabel[v][j]) for u, i, v, j in cov.cross_edges}
    return Cover(g, cov.sizes, frozenset(xs))


@dataclass(frozen=True)
class CoverEnumeration:
    """Mixed-radix cursor over normalized full k-fold covers.

    Index ``0`` assigns the identity to every free edge; the first free edge
    (lowest id) is the most significant digit. Sub-ranges ``[start, stop)`` are
    independent and may be consumed by separate workers.
    """

    base: Graph
    k: int
    forest_edges: tuple[int, ...]
    free_edges: tuple[int, ...]

    @cached_property
    def perms(self) -> list[tuple[int, ...]]:
        return list(permutations(range(self.k)))

    @property
    def total(self) -> int:
        return factorial(self.k) ** len(self.free_edges)

    def digits(self, index: int) -> list[int]:
        r = factorial(self.k)
        out = []
        for _ in self.free_edges:
            index, d = divmod(index, r)
            out.append(d)
        return out[::-1]

    def perms_at(self, index: int) -> list[tuple[int, ...]]:
        per_edge = [self.perms[0]] * self.base.m
        for e, d in zip(self.free_edges, self.digits(index)):
            per_edge[e] = self.perms[d]
        return per_edge

    def cover_at(self, index: int) -> Cover:
        return full_cover(self.base, self.k, self.perms_at(index))

    def iter_range(self, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, list[tuple[int, ...]]]]:
        """Yield ``(index, per-edge permutations)`` for ``start <= index < stop``."""
        stop = self.total if stop is None else min(stop, self.total)
        if start >= stop:
            return
        r = factorial(self.k)
        digits = self.digits(start)
        per_edge = self.perms_at(start)
        free = self.free_edges
        for idx in range(start, stop):
            yield idx, per_edge
            # odometer increment, least significant = last free edge
            pos = len(free) - 1
            while pos >= 0:
                digits[pos] += 1
                if digits[pos] < r:
                    per_edge[free[pos]] = self.perms[digits[pos]]
                    break
                digits[pos] = 0
                per_edge[free[pos]] = self.perms[0]
                pos -= 1

    def __iter__(self) -> Iterator[Cover]:
        for _, perms in self.iter_range():
            yield full_cover(self.base, self.k, perms)

    def split(self, parts: int) -> list[tuple[int, int]]:
        total = self.total
        parts = max(1, min(parts, total))
        step = -(-total // parts)
        return [(s, min(s + step, total)) for s in range(0, total, step)]


def enumerate_full_covers(g: Graph, k: int) -> CoverEnumeration:
    if k < 1:
        raise ValueError("k must be >= 1")
    forest = spanning_forest(g)
    fs = set(forest)
    free = tuple(e for e in range(g.m) if e not in fs)
    return CoverEnumeration(g, k, tuple(forest), free)


# --- serialization ----------------------------------------------------------

class CoverFormatError(GraphFormatError):
    pass


class CoverValidationError(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(str(report))


def serialize_cover(cov: Cover) -> str:
    out = ["dpcover 1", format_graph(cov.base).rstrip("\n")]
    out.append("sizes " + " ".join(map(str, cov.sizes)) if cov.sizes else "sizes")
    out += [f"xedge {u} {i} {v} {j}" for u, i, v, j in sorted(cov.cross_edges)]
    return "\n".join(out) + "\n"


def parse_cover(text: str, validate: bool = True) -> Cover:
    """Parse the ``dpcover 1`` format; rejects invalid covers unless ``validate=False``."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0][1].split() != ["dpcover", "1"]:
        raise CoverFormatError("expected header 'dpcover 1'", lines[0][0] if lines else None)
    try:
        g, pos = _parse_graph_lines(lines, 1)
    except GraphFormatError as exc:
        raise CoverFormatError(str(exc).split(": ", 1)[-1], exc.line) from None
    if pos >= len(lines) or lines[pos][1].split()[0] != "sizes":
        raise CoverFormatError("expected 'sizes' line", lines[min(pos, len(lines) - 1)][0])
    lineno, ln = lines[pos]
    try:
        sizes = tuple(int(x) for x in ln.split()[1:])
    except ValueError:
        raise CoverFormatError("non-integer class size", lineno) from None
    if len(sizes) != g.n:
        raise CoverFormatError(f"expected {g.n} sizes, got {len(sizes)}", lineno)
    xs = set()
    for lineno, ln in lines[pos + 1:]:
        toks = ln.split()
        if len(toks) != 5 or toks[0] != "xedge":
            raise CoverFormatError(f"expected 'xedge <u> <i> <v> <j>', got {ln!r}", lineno)
        try:
            u, i, v, j = map(int, toks[1:])
        except ValueError:
            raise CoverFormatError(f"non-integer field in {ln!r}", lineno) from None
        if u >= v:
            raise CoverFormatError("xedge requires u < v", lineno)
        xs.add((u, i, v, j))
    cov = Cover(g, sizes, frozenset(xs))
    if validate:
        rep = validate_cover(cov)
        if not rep.ok:
            raise CoverValidationError(rep)
    return cov

