"""Exact transversal search and DP-chromatic number computation.

Domains are bitmasks of surviving slots per class. Picking slot ``i`` of ``u``
deletes the cross-neighbours of ``(u, i)`` from every other class; a class
whose domain empties is a dead end.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .cover import Cover, CoverEnumeration, Transversal, enumerate_full_covers
from .graph import Graph, degeneracy, line_graph

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8

Adj = list[list[list[tuple[int, int]]]]


class BudgetExceeded(RuntimeError):
    def __init__(self, k: int, total: int, budget: int):
        self.k, self.total, self.budget = k, total, budget
        super().__init__(f"k={k}: {total} covers to enumerate exceeds budget {budget}")


@dataclass
class SolveStats:
    nodes: int
    colorable: bool
    witness: Transversal | None = None


def _adj_lists(cov: Cover) -> Adj:
    return [[sorted(d.items()) for d in row] for row in cov.adjacency]


def _adj_from_perms(g: Graph, k: int, perms: Sequence[Sequence[int]]) -> Adj:
    adj: list[list[dict[int, int]]] = [[{} for _ in range(k)] for _ in range(g.n)]
    for (u, v), p in zip(g.edges, perms):
        for i in range(k):
            j = p[i]
            du, dv = adj[u][i], adj[v][j]
            du[v] = du.get(v, 0) | (1 << j)
            dv[u] = dv.get(u, 0) | (1 << i)
    return [[list(d.items()) for d in row] for row in adj]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    def __init__(self, sizes: Sequence[int], adj: Adj):
        self.n = len(sizes)
        self.adj = adj
        self.full = [(1 << s) - 1 for s in sizes]
        self.nodes = 0

    def _choose(self, dom: list[int], assigned: list[bool]):
        best, best_c = -1, 1 << 30
        for u in range(self.n):
            if not assigned[u]:
                c = dom[u].bit_count()
                if c < best_c:
                    best, best_c = u, c
        return best

    def _pick(self, dom: list[int], u: int, i: int) -> list[int] | None:
        new = dom[:]
        new[u] = 1 << i
        for v, mask in self.adj[u][i]:
            if v != u:
                nv = new[v] & ~mask
                if not nv:
                    return None
                new[v] = nv
        return new

    def first(self) -> list[int] | None:
        if any(f == 0 for f in self.full):
            return None
        picks = [-1] * self.n
        assigned = [False] * self.n

        def rec(dom: list[int], left: int) -> bool:
            self.nodes += 1
            if left == 0:
                return True
            u = self._choose(dom, assigned)
            assigned[u] = True
            for i in _bits(dom[u]):
                new = self._pick(dom, u, i)
                if new is not None:
                    picks[u] = i
                    if rec(new, left - 1):
                        return True
            assigned[u] = False
            picks[u] = -1
            return False

        return picks if rec(self.full[:], self.n) else None

    def count(self) -> int:
        if any(f == 0 for f in self.full):
            return 0
        assigned = [False] * self.n

        def rec(dom: list[int], left: int) -> int:
            self.nodes += 1
            if left == 0:
                return 1
            u = self._choose(dom, assigned)
            assigned[u] = True
            total = 0
            for i in _bits(dom[u]):
                new = self._pick(dom, u, i)
                if new is not None:
                    total += rec(new, left - 1)
            assigned[u] = False
            return total

        return rec(self.full[:], self.n)


def solve(cov: Cover) -> SolveStats:
    s = _Search(cov.sizes, _adj_lists(cov))
    picks = s.first()
    if picks is None:
        return SolveStats(s.nodes, False)
    return SolveStats(s.nodes, True, Transversal(tuple(picks)))


def find_transversal(cov: Cover) -> Transversal | None:
    """Deterministic witness: fewest-slots class first (ties lowest vertex), slots ascending."""
    return solve(cov).witness


def count_transversals(cov: Cover) -> int:
    return _Search(cov.sizes, _adj_lists(cov)).count()


def propagate_units(cov: Cover) -> list[int] | None:
    """Fix every singleton class and delete its cross-neighbours, to a fixpoint.

    Returns the slot bitmask per class, or ``None`` if some class empties.
    """
    adj = _adj_lists(cov)
    dom = [(1 << s) - 1 for s in cov.sizes]
    done = [False] * cov.base.n
    changed = True
    while changed:
        changed = False
        for u in range(cov.base.n):
            if dom[u] == 0:
                return None
            if not done[u] and dom[u].bit_count() == 1:
                done[u] = True
                changed = True
                i = dom[u].bit_length() - 1
                for v, mask in adj[u][i]:
                    dom[v] &= ~mask
    return None if any(d == 0 for d in dom) else dom


def greedy_transversal(cov: Cover, ordering: Sequence[int]) -> Transversal | None:
    """Pick, in ``ordering``, the lowest slot clear of already-picked neighbours.

    Always succeeds when each class is larger than the number of base edges to
    vertices earlier in ``ordering``.
    """
    adj = cov.adjacency
    picks = [-1] * cov.base.n
    for u in ordering:
        blocked = 0
        for v in cov.base.neighbors[u]:
            if picks[v] >= 0:
                blocked |= adj[v][picks[v]].get(u, 0)
        free = ((1 << cov.sizes[u]) - 1) & ~blocked
        if not free:
            return None
        picks[u] = (free & -free).bit_length() - 1
    return Transversal(tuple(picks))


# --- DP-colorability --------------------------------------------------------

@dataclass
class DPResult:
    colorable: bool
    k: int
    checked: int
    certificate: str  # "enumeration" or "degeneracy"
    counterexample: Cover | None = None
    index: int | None = None


def _scan(enum: CoverEnumeration, start: int, stop: int) -> tuple[int | None, int]:
    # Smallest index in [start, stop) whose cover has no transversal.
    g, k = enum.base, enum.k
    sizes = [k] * g.n
    checked = 0
    for idx, perms in enum.iter_range(start, stop):
        checked += 1
        if _Search(sizes, _adj_from_perms(g, k, perms)).first() is None:
            return idx, checked
    return None, checked


def is_dp_colorable(
    g: Graph,
    k: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    use_degeneracy_bound: bool = True,
) -> DPResult:
    """Whether every k-fold cover of ``g`` has a transversal.

    Decided over normalized full covers; on failure the counterexample with the
    smallest cursor index is returned whatever ``jobs`` is. With
    ``use_degeneracy_bound`` the answer for ``k > degeneracy(g)`` is the greedy
    guarantee and no enumeration happens.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if use_degeneracy_bound and g.n and k >= degeneracy(g)[0] + 1:
        return DPResult(True, k, 0, "degeneracy")
    enum = enumerate_full_covers(g, k)
    total = enum.total
    if total > budget:
        raise BudgetExceeded(k, total, budget)
    log.debug("k=%d: enumerating %d covers", k, total)
    if jobs <= 1 or total < 1000:
        idx, checked = _scan(enum, 0, total)
    else:
        idx, checked = None, 0
        chunks = enum.split(jobs * 8)
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futs = [ex.submit(_scan, enum, a, b) for a, b in chunks]
            # chunks resolve in cursor order, so the first hit is the minimum
            for f in futs:
                i, c = f.result()
                checked += c
                if i is not None:
                    idx = i
                    for rest in futs:
                        rest.cancel()
                    break
    if idx is None:
        return DPResult(True, k, checked, "enumeration")
    return DPResult(False, k, checked, "enumeration", enum.cover_at(idx), idx)


def chi_dp_search(
    g: Graph,
    max_k: int | None = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    use_degeneracy_bound: bool = True,
) -> tuple[int, DPResult | None]:
    """Least DP-colorable k searched upward from 1, plus the failing result at k - 1."""
    if g.n == 0:
        return 0, None
    max_k = g.max_degree() + 1 if max_k is None else max_k
    last = None
    for k in range(1, max_k + 1):
        res = is_dp_colorable(g, k, budget, jobs, use_degeneracy_bound)
        if res.colorable:
            return k, last
        last = res
    raise ValueError(f"not DP-colorable for any k <= {max_k}")


def chi_dp(g: Graph, **kw) -> int:
    """DP-chromatic number; keyword arguments as :func:`chi_dp_search`."""
    return chi_dp_search(g, **kw)[0]


def chi_dp_edge(g: Graph, **kw) -> int:
    return chi_dp(line_graph(g), **kw)
