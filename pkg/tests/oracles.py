"""Independent reference implementations used as test oracles.

Everything here works from networkx shortest paths and plain Python
definitions, never from the package's distance matrix or batch engine.
"""
from __future__ import annotations

import itertools

import networkx as nx


def nx_graph(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_distances(g) -> list[list[int]]:
    lengths = dict(nx.all_pairs_shortest_path_length(nx_graph(g)))
    return [[lengths[u][v] for v in range(g.n)] for u in range(g.n)]


def resolving(d, W) -> bool:
    seen = set()
    for v in range(len(d)):
        code = tuple(d[v][w] for w in W)
        if code in seen:
            return False
        seen.add(code)
    return True


def wtr(d, W) -> bool:
    """Weak total resolving, straight from the definition."""
    if not resolving(d, W):
        return False
    inside = set(W)
    for v in W:
        rest = [w for w in W if w != v]
        for u in range(len(d)):
            if u in inside:
                continue
            if not any(d[u][w] != d[v][w] for w in rest):
                return False
    return True


def dim(g) -> int:
    d = nx_distances(g)
    for k in range(1, g.n + 1):
        if any(resolving(d, W) for W in itertools.combinations(range(g.n), k)):
            return k
    raise AssertionError


def dim_wt(g) -> int:
    d = nx_distances(g)
    for k in range(1, g.n + 1):
        if any(wtr(d, W) for W in itertools.combinations(range(g.n), k)):
            return k
    raise AssertionError


def res_wt(g) -> int:
    d = nx_distances(g)
    for k in range(1, g.n + 1):
        if all(wtr(d, W) for W in itertools.combinations(range(g.n), k)):
            return k
    raise AssertionError


def twins(g) -> set[int]:
    h = nx_graph(g)
    out = set()
    for u, v in itertools.combinations(range(g.n), 2):
        if set(h[u]) - {v} == set(h[v]) - {u}:
            out |= {u, v}
    return out


def chromatic(g) -> int:
    h = nx_graph(g)
    for k in range(1, g.n + 1):
        for colours in itertools.product(range(k), repeat=g.n):
            if all(colours[u] != colours[v] for u, v in h.edges):
                return k
    raise AssertionError


def clique(g) -> int:
    return max(len(c) for c in nx.find_cliques(nx_graph(g)))
