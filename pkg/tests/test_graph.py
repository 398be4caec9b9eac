import numpy as np
import pytest
from hypothesis import given

import oracles
from conftest import connected_graphs
from weaktotal import constructions as C
from weaktotal.graph import (
    DisconnectedGraph,
    DuplicateEdge,
    GraphError,
    SelfLoop,
    TooSmall,
    VertexOutOfRange,
    build_graph,
    classify_vertices,
    common_neighbors,
    find_twins,
    from_labeled_edges,
    is_complete_vertex,
    is_cycle,
    is_path,
    is_tree,
    twin_pair,
)


def test_build_smallest_and_triangle():
    p2 = build_graph([(0, 1)], 2)
    assert (p2.n, p2.m) == (2, 1)
    k3 = build_graph([(0, 1), (1, 2), (2, 0)], 3)
    assert k3.edges == ((0, 1), (0, 2), (1, 2))
    assert k3.degrees == (2, 2, 2)


@pytest.mark.parametrize(
    "edges, n, err",
    [
        ([(0, 1), (2, 3)], 4, DisconnectedGraph),
        ([(0, 0), (0, 1)], 2, SelfLoop),
        ([(0, 1), (1, 0)], 2, DuplicateEdge),
        ([], 1, TooSmall),
        ([(0, 5)], 3, VertexOutOfRange),
        ([(0, 1)], 3, DisconnectedGraph),
    ],
)
def test_build_rejects(edges, n, err):
    with pytest.raises(err):
        build_graph(edges, n)
    assert issubclass(err, GraphError)


def test_labels_are_remapped_and_kept():
    g = from_labeled_edges([("b", "a"), ("b", "c")])
    assert g.labels == ("a", "b", "c")
    assert g.edges == ((0, 1), (1, 2))
    assert g.label(1) == "b"


def test_distances_on_paths_and_cycles(p4):
    assert p4.distances[0, 3] == 3
    assert C.cycle(5).diameter == 2
    assert not p4.distances.flags.writeable


@given(connected_graphs(max_n=9))
def test_distance_matrix_matches_networkx(g):
    d = g.distances
    assert d.tolist() == oracles.nx_distances(g)
    assert (d == d.T).all()
    assert ((d == 0) == np.eye(g.n, dtype=bool)).all()
    assert ((d == 1) == g.adjacency_matrix).all()
    # triangle inequality
    assert (d[:, :, None] <= d[:, None, :] + d.T[None, :, :]).all()


@given(connected_graphs(max_n=9))
def test_neighbour_distance_condition(g):
    d = g.distances
    for u, v in g.edges:
        assert np.abs(d[u] - d[v]).max() <= 1


def test_petersen_neighbour_condition():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    g = build_graph(outer + spokes + inner, 10)
    d = g.distances
    assert all(np.abs(d[u] - d[v]).max() <= 1 for u, v in g.edges)
    assert g.diameter == 2


def test_twin_examples():
    assert find_twins(C.complete(5)).vertices == frozenset(range(5))
    assert find_twins(C.path(3)).vertices == {0, 2}
    assert find_twins(C.cycle(6)).vertices == frozenset()
    assert find_twins(C.cycle(4)).vertices == frozenset(range(4))


@given(connected_graphs(max_n=9))
def test_twins_match_definition_and_are_symmetric(g):
    t = find_twins(g)
    assert set(t.vertices) == oracles.twins(g)
    d = g.distances
    for u, v in t.pairs:
        assert twin_pair(g, v, u)
        others = [w for w in range(g.n) if w not in (u, v)]
        assert (d[u, others] == d[v, others]).all()


def test_complete_vertex():
    g = C.join_kr_k1_ks(2, 2)
    # the K_1 vertex sees only the K_r clique
    assert is_complete_vertex(g, 2)
    assert not is_complete_vertex(g, 0)
    assert all(is_complete_vertex(C.complete(4), v) for v in range(4))
    assert not is_complete_vertex(C.cycle(5), 0)


@given(connected_graphs(max_n=8))
def test_complete_vertex_matches_induced_subgraph(g):
    h = oracles.nx_graph(g)
    for v in range(g.n):
        nb = list(h[v])
        k = len(nb)
        assert is_complete_vertex(g, v) == (h.subgraph(nb).number_of_edges() == k * (k - 1) // 2)


def test_classification_examples():
    star = classify_vertices(C.star(4))
    assert star.terminal_degree == {0: 4}
    assert (star.sigma, star.ex) == (4, 1)
    path = classify_vertices(C.path(6))
    assert (path.sigma, path.ex) == (0, 0)
    assert path.terminal_of == (None,) * 6
    spider = classify_vertices(C.spider([1, 2, 3]))
    assert spider.terminal_degree == {0: 3}
    assert spider.ex == 1
    assert spider.is_leaf.count(True) == 3


@given(connected_graphs(max_n=10))
def test_every_leaf_has_a_strictly_nearest_major(g):
    # the walk from a leaf through degree-2 vertices ends at a unique first major
    c = classify_vertices(g)
    for v in range(g.n):
        if c.is_leaf[v] and any(c.is_major):
            assert c.terminal_of[v] is not None
        elif not c.is_leaf[v]:
            assert c.terminal_of[v] is None


@given(connected_graphs(max_n=10))
def test_sigma_at_least_ex(g):
    c = classify_vertices(g)
    assert c.sigma >= c.ex
    assert c.max_degree == max(c.degree)


def test_shape_predicates():
    assert is_path(C.path(5)) and is_tree(C.path(5))
    assert is_cycle(C.cycle(5)) and not is_tree(C.cycle(5))
    assert not is_path(C.star(3))
    assert common_neighbors(C.cycle(4), 0, 2) == 2
