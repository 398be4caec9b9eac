import pytest
from hypothesis import given

from conftest import trees
from weaktotal import constructions as C
from weaktotal.graph import build_graph, is_path
from weaktotal.io import parse_graph6
from weaktotal.resolving import is_wtr_set
from weaktotal.solvers import metric_dimension, profile, weak_total_metric_dimension
from weaktotal.trees import (
    IsAPath,
    NotATree,
    construct_wtmb,
    decompose_tree,
    tree_dimwt2_characterization,
    tree_metric_dimension,
    tree_reswt_bounds,
    tree_reswt_bounds_multi_branch_only,
    tree_weak_total_dimension,
)


def test_spider_123():
    g = C.spider([1, 2, 3])
    td = decompose_tree(g)
    (m,) = td.majors
    assert m.vertex == 0 and m.lengths == (2, 3, 4)
    assert m.has_unique_shortest
    assert (td.mu, td.theta, td.sigma, td.ex) == (0, 2, 3, 1)
    assert tree_metric_dimension(td) == 2
    assert tree_weak_total_dimension(td) == 2 == weak_total_metric_dimension(g)[0]
    W = construct_wtmb(td)
    assert W.members == (3, 6)  # ends of the two longer legs
    assert is_wtr_set(g, W)
    assert tree_dimwt2_characterization(td)


@pytest.mark.parametrize("a", [3, 4, 5, 6])
def test_star(a):
    td = decompose_tree(C.star(a))
    (m,) = td.majors
    assert m.lengths == (2,) * a and m.twin_leaves and m.has_unique_shortest is False
    assert (td.mu, td.theta) == (1, 2)
    assert tree_metric_dimension(td) == a - 1
    assert tree_weak_total_dimension(td) == a
    assert construct_wtmb(td).members == tuple(range(1, a + 1))
    assert tree_reswt_bounds(td) == (a, a + 1)
    assert profile(C.star(a)).res_wt == a + 1
    assert not tree_dimwt2_characterization(td)


def test_double_spider_bounds_meet():
    for r in (3, 4):
        td = decompose_tree(C.double_spider(r))
        assert td.mu == 2 and tree_weak_total_dimension(td) == 4
        lower, _ = tree_reswt_bounds(td)
        assert lower == 2 * (r + 1) == profile(C.double_spider(r)).res_wt


def test_caterpillar_with_two_exterior_majors():
    # 0 - 1 - 2 - 3 spine; 1 carries legs of 1 and 2 edges, 3 likewise
    g = build_graph([(0, 1), (1, 4), (4, 5), (1, 2), (2, 3), (3, 6), (3, 7), (7, 8)], 9)
    td = decompose_tree(g)
    assert [m.t for m in td.majors] == [2, 2]
    assert tree_dimwt2_characterization(td)
    assert weak_total_metric_dimension(g)[0] == 2


def test_single_branch_major_is_kept_out_of_mu():
    # 6 owns only the long branch to 2; 4 has twin leaves; 3 a unique shortest branch
    g = parse_graph6("JC?IoOO?J??")
    td = decompose_tree(g)
    single = td.major(6)
    assert single.t == 1 and single.has_unique_shortest is None
    assert td.mu == 1
    lo, _ = tree_reswt_bounds(td)
    assert lo == tree_reswt_bounds_multi_branch_only(td)[0] + 3


def test_formula_is_not_exact_on_this_tree():
    # two exterior majors, each with a unique shortest branch; brute force needs
    # three vertices because the far ends of the two long branches collide
    g = parse_graph6("LK?G_?A?KIW??C")
    td = decompose_tree(g)
    assert (td.mu, tree_metric_dimension(td), metric_dimension(g)[0]) == (0, 2, 2)
    assert tree_weak_total_dimension(td) == 2
    assert weak_total_metric_dimension(g)[0] == 3
    assert not is_wtr_set(g, construct_wtmb(td))


def test_lower_bound_is_not_valid_on_this_spider():
    g = C.spider([2, 2, 3])
    td = decompose_tree(g)
    assert tree_reswt_bounds(td) == (7, 7)
    assert profile(g).res_wt == 6


def test_errors():
    with pytest.raises(NotATree):
        decompose_tree(C.cycle(5))
    with pytest.raises(IsAPath):
        decompose_tree(C.path(5))


@given(trees(min_n=4, max_n=12))
def test_decomposition_invariants(g):
    if is_path(g):
        return
    td = decompose_tree(g)
    leaves = {v for v in range(g.n) if g.degrees[v] == 1}
    assert {b.terminal for b in td.branches} == leaves
    assert td.theta >= 2
    for m in td.majors:
        assert g.degrees[m.vertex] >= 3
        assert list(m.lengths) == sorted(m.lengths)
        seen = set()
        for b in m.branches:
            assert b.vertices[0] == m.vertex
            assert all(g.degrees[x] == 2 for x in b.vertices[1:-1])
            assert all(g.adjacent(x, y) for x, y in zip(b.vertices, b.vertices[1:]))
            assert not seen & set(b.vertices[1:])
            seen |= set(b.vertices[1:])
        if m.twin_leaves:
            assert m.has_unique_shortest is False
    assert tree_metric_dimension(td) == td.sigma - td.ex


@given(trees(min_n=4, max_n=12))
def test_metric_dimension_formula(g):
    if is_path(g):
        return
    assert tree_metric_dimension(decompose_tree(g)) == metric_dimension(g)[0]


@given(trees(min_n=4, max_n=10))
def test_weak_total_formula_up_to_ten_vertices(g):
    if is_path(g):
        return
    td = decompose_tree(g)
    W = construct_wtmb(td)
    assert tree_weak_total_dimension(td) == weak_total_metric_dimension(g)[0] == len(W)
    assert is_wtr_set(g, W)


def test_record_shape():
    rec = decompose_tree(C.spider([1, 2, 3])).to_record()
    assert set(rec) == {"n", "sigma", "ex", "mu", "theta", "exterior_majors"}
    assert rec["exterior_majors"][0]["branches"][0] == {"vertices": [0, 1], "length": 2}
