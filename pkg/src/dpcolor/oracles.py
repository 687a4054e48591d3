"""Brute-force reference procedures, kept deliberately independent of the solver."""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations, product

import numpy as np

from .cover import Cover
from .graph import Graph


def naive_transversals(cov: Cover) -> np.ndarray:
    """All pick vectors (rows) that hit no cross edge, by full enumeration."""
    n = cov.base.n
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.arange(s) for s in cov.sizes], indexing="ij")
    picks = np.stack([g.ravel() for g in grids], axis=1)
    ok = np.ones(len(picks), dtype=bool)
    for u, i, v, j in cov.cross_edges:
        ok &= ~((picks[:, u] == i) & (picks[:, v] == j))
    return picks[ok]


def naive_is_colorable(cov: Cover) -> bool:
    return len(naive_transversals(cov)) > 0


def count_list_colorings(g: Graph, lists) -> int:
    total = 0
    for f in product(*[sorted(set(l)) for l in lists]):
        if all(f[u] != f[v] for u, v in g.edges):
            total += 1
    return total


def chromatic_number(g: Graph) -> int:
    for k in range(g.n + 1):
        for f in product(range(k), repeat=g.n):
            if all(f[u] != f[v] for u, v in g.edges):
                return k
    return g.n


def two_colorable(g: Graph) -> bool:
    return any(all(f[u] != f[v] for u, v in g.edges) for f in product(range(2), repeat=g.n))


def bounded_degree_subgraphs(k: int, t: int):
    """Every edge subset of K_{k,k} with maximum degree <= t."""
    pairs = [(i, j) for i in range(k) for j in range(k)]
    for mask in range(1 << len(pairs)):
        chosen = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
        left = [0] * k
        right = [0] * k
        for i, j in chosen:
            left[i] += 1
            right[j] += 1
        if max(left, default=0) <= t and max(right, default=0) <= t:
            yield chosen


def all_k_fold_covers(g: Graph, k: int):
    """Every k-fold cover of ``g`` (C1-C4 or C4'), not only full ones."""
    pairs = sorted(g.multiplicity.items())
    choices = [list(bounded_degree_subgraphs(k, t)) for _, t in pairs]
    for combo in product(*choices):
        xs = frozenset((u, i, v, j) for ((u, v), _), sub in zip(pairs, combo) for i, j in sub)
        yield Cover(g, (k,) * g.n, xs)


def small_multigraphs(max_edges: int) -> list[Graph]:
    """One representative per isomorphism class of multigraphs with at most
    ``max_edges`` edges and no isolated vertices, plus the single vertex."""
    out = [Graph(1, ())]
    seen = set()
    for m in range(1, max_edges + 1):
        for n in range(2, 2 * m + 1):
            for es in combinations_with_replacement(list(combinations(range(n), 2)), m):
                if len({x for e in es for x in e}) != n:
                    continue
                canon = min(
                    tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in es))
                    for p in permutations(range(n))
                )
                if (n, canon) in seen:
                    continue
                seen.add((n, canon))
                out.append(Graph(n, canon, simple=len(set(canon)) == len(canon)))
    return out
