import pytest

from weaktotal import constructions as C
from weaktotal.io import parse_graph6
from weaktotal.theorems import (
    CHECKERS,
    Corpus,
    GraphFacts,
    Tally,
    UnknownTheoremId,
    default_plan,
    format_table,
    graph_corpus,
    run_suite,
    tree_corpus,
)


def _one(reports):
    (r,) = reports
    return r


def test_thm5_on_small_graphs():
    r = _one(run_suite(graph_corpus(5), ["thm5"]))
    assert (r.verdict, r.violations, r.counterexamples) == ("pass", 0, [])
    assert r.graphs == 1 + 4 + 38 + 728


def test_dimwt_formula_on_small_trees():
    r = _one(run_suite(tree_corpus(7, random_orders=[]), ["dimwt-formula"]))
    assert r.verdict == "pass"
    assert r.graphs == sum(n ** (n - 2) for n in range(2, 8))


def test_c4_is_a_scope_note():
    r = _one(run_suite(Corpus.of([C.cycle(4)]), ["cycle-dimwt-3"]))
    assert r.verdict == "scope-note"
    assert r.scope_notes and not r.counterexamples
    assert _one(run_suite([C.cycle(7)], ["cycle-dimwt-3"])).verdict == "pass"


def test_even_cycle_res3():
    assert _one(run_suite([C.cycle(6)], ["res3-classification"])).verdict == "pass"


def test_unknown_and_empty_selection():
    with pytest.raises(UnknownTheoremId):
        run_suite([C.path(3)], ["bogus"])
    with pytest.raises(ValueError):
        run_suite([C.path(3)], [])


def test_failure_is_reproducible_in_isolation():
    r = _one(run_suite(tree_corpus(7, random_orders=[]), ["prop7-lower"]))
    assert r.verdict == "fail" and r.violations > 0
    assert len(r.counterexamples) == 20
    bad = r.counterexamples[0]["graph6"]
    again = _one(run_suite([parse_graph6(bad)], ["prop7-lower"]))
    assert again.verdict == "fail" and again.violations == 1
    assert again.counterexamples[0]["violation"] == r.counterexamples[0]["violation"]


def test_reports_do_not_depend_on_workers_or_chunking():
    graphs = list(C.all_connected_graphs(5))
    ids = ["twins-resn", "prop1", "cycle-dimwt-3", "thm3"]
    a = [x.to_record() for x in run_suite(graphs, ids, jobs=1, chunk_size=1000)]
    b = [x.to_record() for x in run_suite(graphs, ids, jobs=2, chunk_size=97)]
    for x, y in zip(a, b):
        x.pop("runtime"), y.pop("runtime")
    assert a == b


def test_sweeps():
    reports = run_suite([], ["thm9-realization", "thm6-realization", "double-spider", "named-values"])
    assert [r.verdict for r in reports] == ["pass"] * 4
    assert reports[0].applicable == 21 and reports[1].applicable == 36


def test_biconditionals_fail_when_a_direction_breaks():
    # a checker must look at both directions: feed fabricated facts
    f = GraphFacts(C.cycle(6))
    f.res_wt = 3
    t = Tally()
    CHECKERS["res3-classification"].check(f, t)
    assert t.violations == 1
    f = GraphFacts(C.cycle(5))
    f.res_wt = 4
    t = Tally()
    CHECKERS["res3-classification"].check(f, t)
    assert t.violations == 1


def test_dim_wt_two_conditions_are_computed_not_assumed():
    r = _one(run_suite(graph_corpus(5), ["thm2"]))
    assert 0 < r.applicable < r.graphs


def test_tree_checkers_skip_non_trees():
    r = _one(run_suite([C.cycle(5), C.path(5)], ["dimwt-formula"]))
    assert r.applicable == 0 and r.verdict == "pass"


def test_bound_statistics_are_reported():
    r = _one(run_suite(tree_corpus(7, random_orders=[]), ["thm-bounds"]))
    assert {"lower_tight", "upper_tight"} <= set(r.stats)
    rec = r.to_record()
    assert rec["corpus"]["graphs"] == r.graphs and rec["verdict"] == r.verdict


def test_default_plan_covers_every_checker():
    plan = default_plan(max_n=4, tree_count=0, max_tree_n=5)
    covered = {i for _, ids in plan for i in ids}
    assert covered == set(CHECKERS)


def test_format_table():
    text = format_table(run_suite([C.path(4)], ["ineq1", "thm5"]))
    lines = text.splitlines()
    assert lines[0].split()[:2] == ["theorem", "verdict"]
    assert lines[2].startswith("ineq1")


def test_graph_facts_above_the_subset_cap():
    g = C.double_spider(5)
    small, big = GraphFacts(g, subset_cap=20), GraphFacts(g, subset_cap=4)
    assert (small.dim, small.dim_wt) == (big.dim, big.dim_wt) == (2, 4)
    assert small.wtmbs == big.wtmbs
