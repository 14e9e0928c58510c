"""Simple connected graphs, their arcs, and the matrices derived from them.

Vertices are ``0..n-1``. Edges are stored in lexicographic order as pairs
``(u, v)`` with ``u < v``. Arc ``2i`` is ``(u, v)`` and arc ``2i + 1`` is
``(v, u)`` for the ``i``-th edge, so the inverse of arc ``e`` is ``e ^ 1``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from pathlib import Path

import numpy as np

from .errors import (
    BadOrderError,
    DisconnectedError,
    DuplicateEdgeError,
    EmptyGraphError,
    GraphError,
    SelfLoopError,
)

__all__ = [
    "Graph",
    "ArcSet",
    "StructuredMatrices",
    "build_graph",
    "cycle_graph",
    "complete_graph",
    "path_graph",
    "petersen",
    "cube_graph",
    "arcs",
    "matrices",
    "betti",
    "graph_from_json",
    "load_graph",
]


def _frozen(a):
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    name: str = ""
    vertex_transitive: bool = field(default=False, compare=False)

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return _frozen(a)

    @cached_property
    def degrees(self) -> np.ndarray:
        return _frozen(self.adjacency.sum(axis=1))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    def is_regular(self):
        return bool(np.all(self.degrees == self.degrees[0]))

    def regular_degree(self):
        """Common degree of a regular graph, else ``None``."""
        return int(self.degrees[0]) if self.is_regular() else None

    def with_flag(self, vertex_transitive=True, name=None):
        return Graph(self.n, self.edges, self.name if name is None else name,
                     vertex_transitive)

    def to_json(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def __repr__(self):
        label = self.name or "Graph"
        return f"<{label} n={self.n} m={self.m}>"


@dataclass(frozen=True)
class ArcSet:
    """Directed arcs of a graph with their reversal involution."""

    arcs: tuple[tuple[int, int], ...]
    inv: tuple[int, ...]

    def __len__(self):
        return len(self.arcs)

    def origin(self, e):
        return self.arcs[e][0]

    def terminus(self, e):
        return self.arcs[e][1]

    def into(self, v):
        """Indices of arcs ending at ``v``."""
        return [e for e, (_, t) in enumerate(self.arcs) if t == v]

    def out_of(self, v):
        return [e for e, (o, _) in enumerate(self.arcs) if o == v]


@dataclass(frozen=True)
class StructuredMatrices:
    A: np.ndarray
    D: np.ndarray
    T: np.ndarray  # object array of Fraction
    L: np.ndarray  # Laplacian D - A

    def transition_float(self):
        return self.T.astype(float)


def build_graph(edge_list, n, name="", vertex_transitive=False) -> Graph:
    """Validate an edge list and return a canonical :class:`Graph`.

    Raises a :class:`GraphError` subclass naming the offending vertex or edge
    for self-loops, duplicate edges, out-of-range vertices, empty input and
    disconnected graphs.
    """
    n = int(n)
    if n < 2:
        raise EmptyGraphError(f"need at least 2 vertices, got n={n}")
    seen = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphError(f"vertex {x} of edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
    if not seen:
        raise EmptyGraphError("graph has no edges")

    edges = tuple(sorted(seen))
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    reached = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in nbrs[x]:
            if y not in reached:
                reached.add(y)
                queue.append(y)
    if len(reached) != n:
        missing = min(set(range(n)) - reached)
        raise DisconnectedError(f"vertex {missing} is not reachable from vertex 0")
    return Graph(n, edges, name, vertex_transitive)


def cycle_graph(n) -> Graph:
    if n < 3:
        raise BadOrderError(f"cycle_graph needs n >= 3, got {n}")
    return build_graph([(i, (i + 1) % n) for i in range(n)], n,
                       name=f"C{n}", vertex_transitive=True)


def complete_graph(n) -> Graph:
    if n < 2:
        raise BadOrderError(f"complete_graph needs n >= 2, got {n}")
    return build_graph(combinations(range(n), 2), n,
                       name=f"K{n}", vertex_transitive=True)


def path_graph(n) -> Graph:
    if n < 2:
        raise BadOrderError(f"path_graph needs n >= 2, got {n}")
    return build_graph([(i, i + 1) for i in range(n - 1)], n, name=f"P{n}")


def petersen() -> Graph:
    # outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(edges, 10, name="Petersen", vertex_transitive=True)


def cube_graph() -> Graph:
    """The 3-cube Q3: vertices are 3-bit words, edges join words at Hamming distance 1."""
    edges = [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)]
    return build_graph(edges, 8, name="Q3", vertex_transitive=True)


def arcs(g: Graph) -> ArcSet:
    out = []
    for u, v in g.edges:
        out.append((u, v))
        out.append((v, u))
    return ArcSet(tuple(out), tuple(e ^ 1 for e in range(len(out))))


def matrices(g: Graph) -> StructuredMatrices:
    A = g.adjacency
    deg = g.degrees
    D = _frozen(np.diag(deg))
    T = np.empty((g.n, g.n), dtype=object)
    for u in range(g.n):
        for v in range(g.n):
            T[u, v] = Fraction(int(A[u, v]), int(deg[u]))
    return StructuredMatrices(A, D, _frozen(T), _frozen(D - A))


def betti(g: Graph) -> int:
    return g.m - g.n + 1


_GENERATORS = {
    "cycle": cycle_graph,
    "complete": complete_graph,
    "path": path_graph,
}


def graph_from_json(obj, name="") -> Graph:
    """Build a graph from ``{"n": int, "edges": [[u, v], ...]}``."""
    try:
        n, edges = obj["n"], obj["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphError("graph JSON needs keys 'n' and 'edges'") from exc
    return build_graph(edges, n, name=name)


def load_graph(source: str) -> Graph:
    """Resolve a generator string (``cycle:5``, ``petersen``, ...) or a JSON path."""
    kind, _, arg = source.partition(":")
    if kind == "petersen" and not arg:
        return petersen()
    if kind == "cube" and not arg:
        return cube_graph()
    if kind in _GENERATORS and arg:
        try:
            order = int(arg)
        except ValueError as exc:
            raise GraphError(f"bad order in graph spec {source!r}") from exc
        return _GENERATORS[kind](order)
    path = Path(source)
    if not path.is_file():
        raise GraphError(f"unknown graph source {source!r}")
    with open(path) as fh:
        return graph_from_json(json.load(fh), name=path.stem)
