"""Simple connected graphs, distances and the basic vertex vocabulary.

Vertices are always the dense integers ``0..n-1``.  Arbitrary hashable
labels can be supplied through :func:`from_labeled_edges`; the original
labels are kept on the graph for reporting.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, NamedTuple, Sequence

import numpy as np


class GraphError(ValueError):
    """Base class for invalid graph input."""


class DisconnectedGraph(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class TooSmall(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple connected graph on vertices ``0..n-1``.

    Construct through :func:`build_graph`, which validates the input.
    Derived data (neighbourhoods, the distance matrix) is computed lazily
    and cached; the graph is safe to share between workers.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[Hashable, ...] | None = field(default=None, repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in nb) for nb in self.neighbors)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.neighbors)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def adjacent(self, u: int, v: int) -> bool:
        return (self.neighbor_masks[u] >> v) & 1 == 1

    @cached_property
    def dist_rows(self) -> tuple[tuple[int, ...], ...]:
        """Distance matrix as nested tuples (fast scalar indexing)."""
        return tuple(tuple(row) for row in _bfs_all(self.neighbors))

    @cached_property
    def distances(self) -> np.ndarray:
        d = np.array(self.dist_rows, dtype=np.int64)
        d.setflags(write=False)
        return d

    @property
    def diameter(self) -> int:
        return int(self.distances.max())

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            a[u, v] = a[v, u] = True
        a.setflags(write=False)
        return a

    def label(self, v: int) -> Hashable:
        return v if self.labels is None else self.labels[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bfs_all(neighbors: Sequence[Iterable[int]]) -> list[list[int]]:
    n = len(neighbors)
    out = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            dx = dist[x] + 1
            for y in neighbors[x]:
                if dist[y] < 0:
                    dist[y] = dx
                    queue.append(y)
        out.append(dist)
    return out


def _is_connected_masks(n: int, masks: Sequence[int]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def build_graph(
    edges: Iterable[tuple[int, int]],
    n: int,
    labels: Sequence[Hashable] | None = None,
) -> Graph:
    """Validate an edge list on ``0..n-1`` and return a :class:`Graph`.

    Raises ``TooSmall`` for ``n < 2``, ``VertexOutOfRange``, ``SelfLoop``,
    ``DuplicateEdge`` (``(u, v)`` and ``(v, u)`` count as the same edge)
    and ``DisconnectedGraph``.
    """
    n = int(n)
    if n < 2:
        raise TooSmall(f"graphs need at least 2 vertices, got n={n}")
    seen: set[tuple[int, int]] = set()
    masks = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    if not _is_connected_masks(n, masks):
        raise DisconnectedGraph(f"graph on {n} vertices with {len(seen)} edges is disconnected")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
    return Graph(n, tuple(sorted(seen)), labels)


def from_labeled_edges(pairs: Iterable[tuple[Hashable, Hashable]]) -> Graph:
    """Build a graph from edges over arbitrary labels.

    Labels are sorted (by ``repr`` when they are not mutually comparable)
    and remapped to ``0..n-1``; ``graph.labels`` keeps the mapping.
    """
    pairs = list(pairs)
    found = {x for p in pairs for x in p}
    try:
        order = sorted(found)
    except TypeError:
        order = sorted(found, key=repr)
    index = {lab: i for i, lab in enumerate(order)}
    return build_graph(((index[a], index[b]) for a, b in pairs), len(order), order)


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Read-only ``n x n`` matrix of breadth-first distances."""
    return g.distances


class Twins(NamedTuple):
    vertices: frozenset[int]
    pairs: tuple[tuple[int, int], ...]


def twin_pair(g: Graph, u: int, v: int) -> bool:
    """True when ``N(u) - {v} == N(v) - {u}`` (covers adjacent and non-adjacent twins)."""
    nm = g.neighbor_masks
    return (nm[u] & ~(1 << v)) == (nm[v] & ~(1 << u))


def find_twins(g: Graph) -> Twins:
    pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if twin_pair(g, u, v)]
    return Twins(frozenset(x for p in pairs for x in p), tuple(pairs))


def is_complete_vertex(g: Graph, v: int) -> bool:
    nb = g.neighbors[v]
    return all(nb - {a} <= g.neighbors[a] for a in nb)


@dataclass(frozen=True)
class VertexClassification:
    degree: tuple[int, ...]
    is_leaf: tuple[bool, ...]
    is_major: tuple[bool, ...]
    is_twin: tuple[bool, ...]
    is_complete_vertex: tuple[bool, ...]
    # leaf -> its strictly nearest major vertex; None for non-leaves and ties
    terminal_of: tuple[int | None, ...]
    terminal_degree: dict[int, int]
    max_degree: int
    diameter: int

    @property
    def sigma(self) -> int:
        return sum(self.terminal_degree.values())

    @property
    def ex(self) -> int:
        return sum(1 for t in self.terminal_degree.values() if t > 0)

    @property
    def exterior_majors(self) -> list[int]:
        return sorted(v for v, t in self.terminal_degree.items() if t > 0)


def terminal_assignment(g: Graph) -> tuple[tuple[int | None, ...], dict[int, int]]:
    """Map each leaf to its strictly nearest major vertex (``None`` on ties or
    when there is no major vertex) and count terminals per major vertex."""
    deg = g.degrees
    majors = [v for v in range(g.n) if deg[v] >= 3]
    d = g.dist_rows
    terminal_of: list[int | None] = [None] * g.n
    td = {v: 0 for v in majors}
    if majors:
        for leaf in range(g.n):
            if deg[leaf] != 1:
                continue
            row = d[leaf]
            best = min(row[w] for w in majors)
            nearest = [w for w in majors if row[w] == best]
            if len(nearest) == 1:
                terminal_of[leaf] = nearest[0]
                td[nearest[0]] += 1
    return tuple(terminal_of), td


def classify_vertices(g: Graph) -> VertexClassification:
    deg = g.degrees
    terminal_of, td = terminal_assignment(g)
    twins = find_twins(g).vertices
    return VertexClassification(
        degree=deg,
        is_leaf=tuple(x == 1 for x in deg),
        is_major=tuple(x >= 3 for x in deg),
        is_twin=tuple(v in twins for v in range(g.n)),
        is_complete_vertex=tuple(is_complete_vertex(g, v) for v in range(g.n)),
        terminal_of=terminal_of,
        terminal_degree=td,
        max_degree=max(deg),
        diameter=g.diameter,
    )


def common_neighbors(g: Graph, u: int, v: int) -> int:
    return (g.neighbor_masks[u] & g.neighbor_masks[v]).bit_count()


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1


def is_path(g: Graph) -> bool:
    return g.m == g.n - 1 and max(g.degrees) <= 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and all(x == 2 for x in g.degrees)
