import itertools

import pytest
from hypothesis import given

import oracles
from conftest import connected_graphs, graph_and_subset
from weaktotal import constructions as C
from weaktotal.graph import build_graph, find_twins
from weaktotal.resolving import (
    NotResolving,
    VertexSet,
    code_of,
    is_resolving_set,
    is_wtr_set,
    is_wtr_set_via_lemma1,
    unresolved_pairs,
    wtr_violations,
)


def test_codes(p4):
    assert code_of(p4, (0, 3), 1) == (1, 2)
    assert code_of(C.cycle(5), (0, 2), 4) == (1, 2)
    assert code_of(p4, (2, 0), 2) == (0, 2)


def test_resolving_examples(p4):
    assert is_resolving_set(C.path(7), (0,))
    k4 = C.complete(4)
    assert not any(is_resolving_set(k4, W) for W in itertools.combinations(range(4), 2))
    assert not is_resolving_set(C.cycle(6), (0, 3))
    assert (1, 5) in unresolved_pairs(C.cycle(6), (0, 3))


def test_wtr_examples(p4):
    assert is_wtr_set(p4, (0, 3))
    assert not is_wtr_set(p4, (0, 1))
    k3 = C.complete(3)
    assert not is_wtr_set(k3, (0, 1))
    assert is_wtr_set(k3, (0, 1, 2))
    assert is_wtr_set_via_lemma1(p4, (0, 3))
    assert is_wtr_set_via_lemma1(C.star(3), (1, 2, 3))


def test_violations(p4):
    # 0 and the outside vertex 2 are both at distance 1 from 1, the only other member
    assert wtr_violations(p4, (0, 1)) == [(0, 2)]
    assert wtr_violations(p4, (0, 3)) == []
    with pytest.raises(NotResolving):
        wtr_violations(C.cycle(6), (0, 3))


def test_violation_names_the_omitted_twin():
    g = C.join_kr_k1_ks(2, 2)
    W = [v for v in range(g.n) if v != 0]
    assert wtr_violations(g, W) == [(1, 0)]


def test_vertex_set_validation(p4):
    with pytest.raises(ValueError):
        is_wtr_set(p4, ())
    with pytest.raises(ValueError):
        is_wtr_set(p4, (0, 0))
    with pytest.raises(ValueError):
        is_wtr_set(p4, (7,))
    assert VertexSet.from_mask(0b1010).members == (1, 3)
    assert VertexSet((1, 3)).mask == 0b1010
    assert is_wtr_set(p4, VertexSet((0, 3)))


@given(graph_and_subset(max_n=8))
def test_two_predicates_agree_with_each_other_and_the_oracle(gw):
    g, W = gw
    d = oracles.nx_distances(g)
    assert is_resolving_set(g, W) == oracles.resolving(d, W)
    expected = oracles.wtr(d, W)
    assert is_wtr_set(g, W) == expected
    assert is_wtr_set_via_lemma1(g, W) == expected
    if is_resolving_set(g, W):
        assert (wtr_violations(g, W) == []) == expected


@given(graph_and_subset(max_n=8))
def test_wtr_sets_contain_every_twin(gw):
    g, W = gw
    if is_wtr_set(g, W):
        assert find_twins(g).vertices <= set(W)


@given(graph_and_subset(max_n=8))
def test_superset_closure(gw):
    g, W = gw
    wtr, res = is_wtr_set(g, W), is_resolving_set(g, W)
    for extra in range(g.n):
        if extra in W:
            continue
        bigger = tuple(sorted(W + (extra,)))
        if wtr:
            assert is_wtr_set(g, bigger)
        if res:
            assert is_resolving_set(g, bigger)


@given(connected_graphs(max_n=9))
def test_whole_vertex_set_is_wtr(g):
    assert is_wtr_set(g, range(g.n))


def test_lemma1_exhaustive_small():
    for n in range(2, 5):
        for g in C.all_connected_graphs(n):
            for k in range(1, n + 1):
                for W in itertools.combinations(range(n), k):
                    assert is_wtr_set(g, W) == is_wtr_set_via_lemma1(g, W)


def test_codes_use_member_order():
    g = build_graph([(0, 1), (1, 2)], 3)
    assert code_of(g, (2, 0), 0) == (2, 0)
