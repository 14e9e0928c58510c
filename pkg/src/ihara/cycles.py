"""Counting reduced cycles two independent ways.

``count_reduced_cycles`` walks every non-backtracking closed path by depth
first search. ``hashimoto_trace_counts`` takes traces of powers of the arc
adjacency (Hashimoto) matrix. The two share no code beyond the graph itself,
so agreement between them is a real check.

Cycles are counted with a distinguished starting arc, so a triangle
contributes 6 cycles of length 3 (3 starting points, 2 directions).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError
from .graph import Graph

DEFAULT_BUDGET = 10**8

__all__ = [
    "CycleCounts",
    "count_reduced_cycles",
    "count_rooted_reduced_cycles",
    "hashimoto_matrix",
    "hashimoto_trace_counts",
    "DEFAULT_BUDGET",
]


@dataclass(frozen=True)
class CycleCounts:
    """``counts[k - 1]`` is N_k; ``rooted[k - 1]`` is N_k for a fixed root."""

    counts: tuple[int, ...]
    rooted: tuple[int, ...] | None = None
    root: int | None = None

    def N(self, k):
        return self.counts[k - 1]

    def N0(self, k):
        return self.rooted[k - 1]

    @property
    def k_max(self):
        return len(self.counts)


def _estimate_work(g: Graph, n_start_arcs, k_max):
    branch = max(int(g.degrees.max()) - 1, 1)
    return n_start_arcs * sum(branch**j for j in range(k_max))


def _enumerate(g: Graph, roots, k_max, budget):
    nbrs = g.neighbors
    n_start = sum(len(nbrs[x]) for x in roots)
    est = _estimate_work(g, n_start, k_max)
    if est > budget:
        raise BudgetExceededError(
            f"estimated {est} DFS steps for k_max={k_max} exceeds budget {budget}")

    counts = [0] * (k_max + 1)
    for x0 in roots:
        for x1 in nbrs[x0]:
            # stack of (vertex, previous vertex, arcs used so far)
            stack = [(x1, x0, 1)]
            while stack:
                v, prev, k = stack.pop()
                # closed, no tail: last arc (prev, x0) must differ from (x1, x0)
                if v == x0 and prev != x1:
                    counts[k] += 1
                if k == k_max:
                    continue
                for w in nbrs[v]:
                    if w != prev:
                        stack.append((w, v, k + 1))
    return tuple(counts[1:])


def count_reduced_cycles(g: Graph, k_max, budget=DEFAULT_BUDGET) -> CycleCounts:
    """Brute-force N_1..N_{k_max} by depth first search over arc sequences."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    return CycleCounts(_enumerate(g, range(g.n), k_max, budget))


def count_rooted_reduced_cycles(g: Graph, x0, m_max, budget=DEFAULT_BUDGET) -> CycleCounts:
    """Reduced cycles that start and end at vertex ``x0``.

    The returned ``counts`` field also holds the rooted counts, so the result
    can be fed wherever a :class:`CycleCounts` is expected.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    if not 0 <= x0 < g.n:
        raise ValueError(f"root {x0} is not a vertex")
    rooted = _enumerate(g, [x0], m_max, budget)
    return CycleCounts(rooted, rooted=rooted, root=x0)


def hashimoto_matrix(g: Graph, dtype=np.int64) -> np.ndarray:
    """B[e, f] = 1 iff arc e ends where arc f starts and f is not the reverse of e."""
    directed = []
    for u, v in g.edges:
        directed += [(u, v), (v, u)]
    size = len(directed)
    B = np.zeros((size, size), dtype=dtype)
    for i, (a, b) in enumerate(directed):
        for j, (c, d) in enumerate(directed):
            if b == c and d != a:
                B[i, j] = 1
    return B


def hashimoto_trace_counts(g: Graph, k_max) -> CycleCounts:
    """N_k = trace(B^k), in exact integer arithmetic."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    size = 2 * g.m
    branch = max(int(g.degrees.max()) - 1, 1)
    # entries of B^k are bounded by branch^k; fall back to Python ints on overflow risk
    exact_int64 = size * branch**k_max < 2**62
    B = hashimoto_matrix(g, np.int64 if exact_int64 else object)
    P = B.copy()
    traces = []
    for _ in range(k_max):
        traces.append(int(np.trace(P)))
        P = P @ B
    return CycleCounts(tuple(traces))
