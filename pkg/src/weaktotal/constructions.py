"""Graph families and exhaustive / random corpora.

Single families return one :class:`Graph`; corpus families return
iterators.  Everything is deterministic given its parameters (random trees
take an explicit seed).
"""
from __future__ import annotations

import heapq
import itertools
import math
from typing import Callable, Iterable, Iterator

import numpy as np

from .graph import Graph, _is_connected_masks, build_graph
from .io import to_graph6


class BadParameters(ValueError):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameters(msg)


def path(n: int) -> Graph:
    _need(n >= 2, "path needs n >= 2")
    return build_graph([(i, i + 1) for i in range(n - 1)], n)


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return build_graph([(i, (i + 1) % n) for i in range(n)], n)


def complete(n: int) -> Graph:
    _need(n >= 2, "complete graph needs n >= 2")
    return build_graph(itertools.combinations(range(n), 2), n)


def star(a: int) -> Graph:
    """K_{1,a}: centre 0, leaves 1..a."""
    _need(a >= 1, "star needs a >= 1")
    return build_graph([(0, i) for i in range(1, a + 1)], a + 1)


def spider(legs: Iterable[int]) -> Graph:
    """Centre 0 with one path per entry of ``legs`` (lengths in edges)."""
    legs = list(legs)
    _need(len(legs) >= 1 and all(x >= 1 for x in legs), "spider legs must be >= 1 edge")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(edges, nxt)


def join_kr_k1_ks(r: int, s: int) -> Graph:
    """K_r + (K_1 u K_s): vertices 0..r-1 form K_r, r is the K_1, the rest K_s."""
    _need(r >= 2 and s >= 2, "join_Kr_K1_Ks needs r, s >= 2")
    n = r + s + 1
    kr = range(r)
    ks = range(r + 1, n)
    edges = set(itertools.combinations(kr, 2)) | set(itertools.combinations(ks, 2))
    edges |= {(i, j) for i in kr for j in range(r, n)}
    return build_graph(sorted(edges), n)


def double_k3_path(a: int = 2) -> Graph:
    """Two triangles joined through a path on ``a`` vertices, each with a pendant leaf.

    Triangles ``{u, v, w}`` and ``{x, y, z}``; the path runs from ``v`` to
    ``y``; leaf ``l`` hangs at ``u`` and ``l'`` at ``x``.  Labels are kept so
    ``{l, l'}`` can be looked up by name.
    """
    _need(a >= 2, "double_K3_path needs a path of at least 2 vertices")
    labels = ["u", "v", "w", "x", "y", "z", "l", "l'"]
    inner = [f"p{i}" for i in range(1, a - 1)]
    labels += inner
    idx = {name: i for i, name in enumerate(labels)}
    chain = ["v", *inner, "y"]
    pairs = [("u", "v"), ("v", "w"), ("u", "w"), ("x", "y"), ("y", "z"), ("x", "z"), ("l", "u"), ("l'", "x")]
    pairs += list(zip(chain, chain[1:]))
    return build_graph([(idx[p], idx[q]) for p, q in pairs], len(labels), labels)


def _attach_path(edges: list[tuple[int, int]], start: int, at: int, count: int) -> int:
    """Hang ``count`` new vertices as a path from ``at``; returns the next free id."""
    prev = at
    for i in range(count):
        edges.append((prev, start + i))
        prev = start + i
    return start + count


def thm9_realization(a: int, b: int) -> Graph:
    """A graph with dim_wt = a and res_wt = b, for 3 <= a <= b."""
    _need(3 <= a <= b, "thm9 family needs 3 <= a <= b")
    if a == b:
        return complete(b)
    if a == 3:
        # K_3 on {0, 1, 2}; a path on b - 2 vertices shares its end with vertex 2
        edges = [(0, 1), (0, 2), (1, 2)]
        _attach_path(edges, 3, 2, b - 3)
        return build_graph(edges, b)
    if a == b - 1:
        return star(a)
    # K_4 - e on w=0, x=1, y=2, z=3 without y~z; a-2 leaves at w;
    # a path on b-a-1 vertices shares its end with x
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
    edges += [(0, 4 + i) for i in range(a - 2)]
    _attach_path(edges, 4 + a - 2, 1, b - a - 2)
    return build_graph(edges, b)


def thm6_realization(a: int, b: int) -> Graph:
    """A graph of order b with dim_wt = a, for 2 <= a <= b (a broom when a < b)."""
    _need(2 <= a <= b, "thm6 family needs 2 <= a <= b")
    if a == b:
        return complete(b)
    plen = b - a + 1
    edges = [(i, i + 1) for i in range(plen - 1)]
    edges += [(0, plen + i) for i in range(a - 1)]
    return build_graph(edges, b)


def double_spider(r: int) -> Graph:
    """Adjacent x=0, y=1; x carries two paths of r vertices (x included),
    y two paths of 3 vertices (y included).  Order 2r + 4."""
    _need(r >= 3, "double_spider needs r >= 3")
    edges = [(0, 1)]
    nxt = 2
    for root, count in ((0, r - 1), (0, r - 1), (1, 2), (1, 2)):
        nxt = _attach_path(edges, nxt, root, count)
    return build_graph(edges, nxt)


def prufer_to_edges(seq: Iterable[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence of length n-2 into the edges of a labelled tree."""
    seq = list(seq)
    if len(seq) != n - 2:
        raise BadParameters(f"Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labelled trees on 0..n-1, in Prüfer-sequence order."""
    _need(n >= 2, "trees need n >= 2")
    for seq in itertools.product(range(n), repeat=n - 2):
        yield build_graph(prufer_to_edges(seq, n), n)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree (uniform random Prüfer sequence)."""
    _need(n >= 2, "trees need n >= 2")
    rng = np.random.default_rng(seed)
    return build_graph(prufer_to_edges(rng.integers(0, n, size=n - 2).tolist(), n), n)


def random_trees(n: int, count: int, seed: int) -> Iterator[Graph]:
    rng = np.random.default_rng([seed, n])
    for _ in range(count):
        yield build_graph(prufer_to_edges(rng.integers(0, n, size=n - 2).tolist(), n), n)


def all_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on 0..n-1 (edge subsets in increasing bit order)."""
    _need(n >= 2, "graphs need n >= 2")
    pairs = list(itertools.combinations(range(n), 2))
    bit_masks = [((1 << u), (1 << v)) for u, v in pairs]
    for code in range(1 << len(pairs)):
        # a connected graph needs at least n-1 edges
        if code.bit_count() < n - 1:
            continue
        masks = [0] * n
        chosen = []
        for i, (u, v) in enumerate(pairs):
            if (code >> i) & 1:
                masks[u] |= bit_masks[i][1]
                masks[v] |= bit_masks[i][0]
                chosen.append((u, v))
        if _is_connected_masks(n, masks):
            yield Graph(n, tuple(chosen))


def connected_graph_count(n: int) -> int:
    """Number of connected labelled graphs on n vertices (standard recurrence)."""
    c = [0, 1]
    for m in range(2, n + 1):
        total = 2 ** math.comb(m, 2)
        total -= sum(math.comb(m - 1, k - 1) * c[k] * 2 ** math.comb(m - k, 2) for k in range(1, m))
        c.append(total)
    return c[n]


def _tree_centers(g: Graph) -> list[int]:
    deg = list(g.degrees)
    layer = [v for v in range(g.n) if deg[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.neighbors[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def _ahu(g: Graph, root: int, parent: int) -> str:
    return "(" + "".join(sorted(_ahu(g, c, root) for c in g.neighbors[root] if c != parent)) + ")"


def canonical_form(g: Graph) -> str:
    """Isomorphism-invariant string.

    Trees use the AHU encoding rooted at the centre(s).  Other graphs take
    the minimum graph6 over degree-respecting relabellings, which is
    exponential in the sizes of the degree classes; meant for small corpora.
    """
    if g.m == g.n - 1:
        return "T" + min(_ahu(g, c, -1) for c in _tree_centers(g))
    deg = g.degrees
    classes = [sorted(v for v in range(g.n) if deg[v] == d) for d in sorted(set(deg))]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [v for part in parts for v in part]
        pos = {v: i for i, v in enumerate(order)}
        h = Graph(g.n, tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges)))
        s = to_graph6(h)
        if best is None or s < best:
            best = s
    return best


def unique_up_to_isomorphism(graphs: Iterable[Graph]) -> Iterator[Graph]:
    seen: set[str] = set()
    for g in graphs:
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g


FAMILIES: dict[str, Callable] = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "spider": spider,
    "join_Kr_K1_Ks": join_kr_k1_ks,
    "double_K3_path": double_k3_path,
    "thm9_family": thm9_realization,
    "thm6_family": thm6_realization,
    "double_spider": double_spider,
    "all_labeled_trees": all_labeled_trees,
    "all_connected_graphs": all_connected_graphs,
    "random_tree": random_tree,
    "random_trees": random_trees,
}


def generate(family: str, **params) -> list[Graph]:
    """Materialise a family as a list (single graphs become one-element lists)."""
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise BadParameters(f"unknown family {family!r}; known: {', '.join(FAMILIES)}") from None
    try:
        out = fn(**params)
    except TypeError as exc:
        raise BadParameters(f"{family}: {exc}") from None
    return [out] if isinstance(out, Graph) else list(out)
