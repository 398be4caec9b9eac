"""Empirical verification of the weak total resolvability results.

Each checker is a predicate over one graph (or, for realization results, a
parameter sweep) that records violations with the offending graph in
graph6.  :func:`run_suite` drives a selection of checkers over a corpus and
returns one :class:`TheoremReport` per checker.

Per-graph quantities (distance table, dim, dim_wt, res_wt, all minimum
bases, ...) live on :class:`GraphFacts` and are computed on first use, so a
selection only pays for what it needs.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator

import numpy as np

from . import constructions as C
from .graph import Graph, common_neighbors, find_twins, is_complete_vertex, is_cycle, is_path, is_tree
from .io import to_graph6
from .resolving import is_resolving_set, is_wtr_set, is_wtr_set_via_lemma1
from .solvers import (
    COLOR_LIMIT,
    PairTable,
    _classify,
    _sized_masks,
    all_masks,
    chromatic_number,
    clique_number,
    metric_bases,
    metric_dimension,
    profile,
    weak_total_metric_bases,
    weak_total_metric_dimension,
    weak_total_resolving_number,
)
from .trees import (
    TreeDecomposition,
    construct_wtmb,
    decompose_tree,
    tree_dimwt2_characterization,
    tree_metric_dimension,
    tree_reswt_bounds,
    tree_reswt_bounds_multi_branch_only,
    tree_weak_total_dimension,
)

SCHEMA = "weaktotal.report/1"


class UnknownTheoremId(KeyError):
    pass


class GraphFacts:
    """Lazily computed quantities for one graph, shared by all checkers."""

    def __init__(self, g: Graph, subset_cap: int = 12):
        self.g = g
        self.subset_cap = subset_cap

    @cached_property
    def graph6(self) -> str:
        return to_graph6(self.g)

    @cached_property
    def table(self) -> PairTable:
        return PairTable.of(self.g)

    @cached_property
    def twins(self) -> frozenset[int]:
        return find_twins(self.g).vertices

    @property
    def exhaustive(self) -> bool:
        """Whether every subset can be enumerated."""
        return self.g.n <= self.subset_cap

    @cached_property
    def masks(self) -> np.ndarray:
        return all_masks(self.g.n)

    @cached_property
    def resolving_flags(self) -> np.ndarray:
        return _classify(self.masks, self.table, False)

    @cached_property
    def wtr_flags(self) -> np.ndarray:
        return _classify(self.masks, self.table, True)

    @cached_property
    def sizes(self) -> np.ndarray:
        return self.masks.sum(axis=1)

    @cached_property
    def dim(self) -> int:
        if self.exhaustive:
            return int(self.sizes[self.resolving_flags].min())
        return metric_dimension(self.g, limit=None)[0]

    @cached_property
    def dim_wt(self) -> int:
        if self.exhaustive:
            return int(self.sizes[self.wtr_flags].min())
        return weak_total_metric_dimension(self.g, limit=None)[0]

    @cached_property
    def res_wt(self) -> int:
        return weak_total_resolving_number(self.g)

    @cached_property
    def wtmbs(self) -> list[tuple[int, ...]]:
        if self.exhaustive:
            rows = self.masks[self.wtr_flags & (self.sizes == self.dim_wt)]
            return sorted(tuple(int(i) for i in np.flatnonzero(r)) for r in rows)
        return [w.members for w in weak_total_metric_bases(self.g, limit=None)]

    @cached_property
    def metric_bases(self) -> list[tuple[int, ...]]:
        return [b.members for b in metric_bases(self.g, limit=None)]

    @cached_property
    def is_tree(self) -> bool:
        return is_tree(self.g)

    @cached_property
    def is_path(self) -> bool:
        return is_path(self.g)

    @cached_property
    def is_cycle(self) -> bool:
        return is_cycle(self.g)

    @property
    def non_path_tree(self) -> bool:
        return self.is_tree and not self.is_path

    @cached_property
    def decomposition(self) -> TreeDecomposition:
        return decompose_tree(self.g)

    @cached_property
    def chi(self) -> int | None:
        return chromatic_number(self.g) if self.g.n <= COLOR_LIMIT else None

    @cached_property
    def omega(self) -> int | None:
        return clique_number(self.g) if self.g.n <= COLOR_LIMIT else None


@dataclass
class Tally:
    applicable: int = 0
    violations: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    scope_notes: list[dict] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)
    seconds: float = 0.0
    limit: int = 20
    _current: str = ""

    def fail(self, message: str) -> None:
        self.violations += 1
        if len(self.counterexamples) < self.limit:
            self.counterexamples.append({"graph6": self._current, "violation": message})

    def note(self, message: str) -> None:
        if len(self.scope_notes) < self.limit:
            self.scope_notes.append({"graph6": self._current, "note": message})

    def count(self, key: str, by: int = 1) -> None:
        self.stats[key] = self.stats.get(key, 0) + by

    def merge(self, other: "Tally") -> None:
        self.applicable += other.applicable
        self.violations += other.violations
        room = self.limit - len(self.counterexamples)
        self.counterexamples.extend(other.counterexamples[: max(room, 0)])
        room = self.limit - len(self.scope_notes)
        self.scope_notes.extend(other.scope_notes[: max(room, 0)])
        for k, v in other.stats.items():
            self.count(k, v)
        self.seconds += other.seconds


@dataclass(frozen=True)
class Checker:
    id: str
    statement: str
    check: Callable | None = None
    applies: Callable[[GraphFacts], bool] = lambda f: True
    sweep: Callable[[Tally], None] | None = None
    corpora: tuple[str, ...] = ("graphs",)


CHECKERS: dict[str, Checker] = {}


def _register(id: str, statement: str, applies=None, corpora=("graphs",)):
    def deco(fn):
        CHECKERS[id] = Checker(id, statement, check=fn, applies=applies or (lambda f: True), corpora=corpora)
        return fn

    return deco


def _register_sweep(id: str, statement: str):
    def deco(fn):
        CHECKERS[id] = Checker(id, statement, sweep=fn, corpora=())
        return fn

    return deco


BOTH = ("graphs", "trees")
TREES = ("trees",)


def _dimwt2(f: GraphFacts) -> bool:
    return f.dim_wt == 2


def _npt(f: GraphFacts) -> bool:
    return f.non_path_tree


def _branch_masks(f: GraphFacts):
    """For exterior majors with >= 2 branches: (major, branch bitmasks without the owner)."""
    for m in f.decomposition.majors:
        if m.t >= 2:
            yield m, [sum(1 << x for x in b.vertices[1:]) for b in m.branches]


def _mask_ints(f: GraphFacts, flags: np.ndarray) -> list[int]:
    return np.flatnonzero(flags).tolist()


# ---------------------------------------------------------------- general graphs


@_register("lemma1", "a resolving set is WTR iff outside codes differ from inside codes in >= 2 coordinates")
def _lemma1(f: GraphFacts, t: Tally) -> None:
    if not f.exhaustive:
        t.count("skipped_above_subset_cap")
        return
    for k in range(1, f.g.n + 1):
        for W in itertools.combinations(range(f.g.n), k):
            a, b = is_wtr_set(f.g, W), is_wtr_set_via_lemma1(f.g, W)
            t.count("subsets")
            if a != b:
                t.fail(f"W={list(W)}: definition={a}, two-coordinate form={b}")


@_register("remark1", "every WTR-set contains all the twins")
def _remark1(f: GraphFacts, t: Tally) -> None:
    if not f.twins:
        return
    tmask = sum(1 << v for v in f.twins)
    sets = _mask_ints(f, f.wtr_flags) if f.exhaustive else [sum(1 << v for v in w) for w in f.wtmbs]
    for w in sets:
        if w & tmask != tmask:
            t.fail(f"WTR-set {bin(w)} misses twins {sorted(f.twins)}")
            return


@_register("wtr-superset-closure", "supersets of WTR-sets (and of resolving sets) keep the property")
def _closure(f: GraphFacts, t: Tally) -> None:
    if not f.exhaustive:
        t.count("skipped_above_subset_cap")
        return
    ints = np.arange(1 << f.g.n)
    for flags, name in ((f.wtr_flags, "WTR"), (f.resolving_flags, "resolving")):
        for b in range(f.g.n):
            base = ints[flags & ((ints >> b) & 1 == 0)]
            if not flags[base | (1 << b)].all():
                bad = int(base[~flags[base | (1 << b)]][0])
                t.fail(f"{name} set {bin(bad)} loses the property after adding vertex {b}")
                return


@_register("ineq1", "dim(G) <= dim_wt(G)", corpora=BOTH)
def _ineq1(f: GraphFacts, t: Tally) -> None:
    if f.dim > f.dim_wt:
        t.fail(f"dim={f.dim} > dim_wt={f.dim_wt}")


@_register("dimwt-le-reswt", "dim_wt(G) <= res_wt(G)", corpora=BOTH)
def _dimwt_res(f: GraphFacts, t: Tally) -> None:
    if f.dim_wt > f.res_wt:
        t.fail(f"dim_wt={f.dim_wt} > res_wt={f.res_wt}")


@_register("prop1", "with m = dim_wt and D = diam: n <= D^m + m, Delta <= 3^m - 1, chi <= 2^m", corpora=BOTH)
def _prop1(f: GraphFacts, t: Tally) -> None:
    g, m = f.g, f.dim_wt
    D = g.diameter
    if g.n > D**m + m:
        t.fail(f"n={g.n} > D^m+m={D**m + m}")
    if g.max_degree > 3**m - 1:
        t.fail(f"Delta={g.max_degree} > 3^m-1")
    if f.chi is not None and f.chi > 2**m:
        t.fail(f"chi={f.chi} > 2^m={2**m}")


@_register("prop3", "for u ~ v and any w, d(u,w) is within 1 of d(v,w)", corpora=BOTH)
def _prop3(f: GraphFacts, t: Tally) -> None:
    d = f.g.distances
    for u, v in f.g.edges:
        if np.abs(d[u] - d[v]).max() > 1:
            t.fail(f"edge ({u},{v}) violates the neighbour distance condition")
            return


@_register("prop4", "n >= 3 and {u,v} a WTMB of size 2 imply u !~ v", applies=_dimwt2, corpora=BOTH)
def _prop4(f: GraphFacts, t: Tally) -> None:
    if f.g.n < 3:
        return
    for u, v in f.wtmbs:
        if f.g.adjacent(u, v):
            t.fail(f"adjacent WTMB {{{u},{v}}}")


@_register("cor-k2", "dim_wt = 2 with WTMB {u,v}: u ~ v iff G is K_2", applies=_dimwt2, corpora=BOTH)
def _cor_k2(f: GraphFacts, t: Tally) -> None:
    k2 = f.g.n == 2
    for u, v in f.wtmbs:
        if f.g.adjacent(u, v) != k2:
            t.fail(f"WTMB {{{u},{v}}} adjacency={f.g.adjacent(u, v)} but G≅K2 is {k2}")


@_register("prop5", "n >= 4, dim_wt = 2: WTMB vertices are not twins and G has no twin", applies=_dimwt2, corpora=BOTH)
def _prop5(f: GraphFacts, t: Tally) -> None:
    if f.g.n < 4:
        return
    if f.twins:
        t.fail(f"twins {sorted(f.twins)} present")


@_register("cor1", "dim_wt = 2: G has twins iff G is P_2 or P_3", applies=_dimwt2, corpora=BOTH)
def _cor1(f: GraphFacts, t: Tally) -> None:
    small_path = f.is_path and f.g.n <= 3
    if bool(f.twins) != small_path:
        t.fail(f"twins={sorted(f.twins)}, G is P2/P3: {small_path}")


@_register("thm2", "dim_wt = 2: both WTMB vertices have degree <= 2", applies=_dimwt2, corpora=BOTH)
def _thm2(f: GraphFacts, t: Tally) -> None:
    for W in f.wtmbs:
        for w in W:
            if f.g.degrees[w] > 2:
                t.fail(f"WTMB {W}: deg({w})={f.g.degrees[w]}")


def _geodesic_count(g: Graph, u: int, v: int) -> int:
    d = g.dist_rows[u]
    ways = [0] * g.n
    ways[u] = 1
    for x in sorted(range(g.n), key=lambda x: d[x]):
        if x != u:
            ways[x] = sum(ways[y] for y in g.neighbors[x] if d[y] == d[x] - 1)
    return ways[v]


@_register("thm3", "dim_wt = 2: unique u-v geodesic; N(u),N(v) degrees <= 3; inner geodesic degrees <= 5; Delta <= 8; no triangle at u or v", applies=_dimwt2, corpora=BOTH)
def _thm3(f: GraphFacts, t: Tally) -> None:
    g = f.g
    d = g.dist_rows
    if g.max_degree > 8:
        t.fail(f"part 4: Delta={g.max_degree}")
    for u, v in f.wtmbs:
        paths = _geodesic_count(g, u, v)
        if paths != 1:
            t.fail(f"part 1: {paths} geodesics between {u} and {v}")
            continue
        near = {u, v} | g.neighbors[u] | g.neighbors[v]
        for z in g.neighbors[u] | g.neighbors[v]:
            if g.degrees[z] > 3:
                t.fail(f"part 2: neighbour {z} of the basis has degree {g.degrees[z]}")
        on_path = [x for x in range(g.n) if d[u][x] + d[x][v] == d[u][v]]
        for y in on_path:
            if y not in near and g.degrees[y] > 5:
                t.fail(f"part 3: geodesic vertex {y} has degree {g.degrees[y]}")
        for w in (u, v):
            for z in g.neighbors[w]:
                for r in g.neighbors[z]:
                    if r != w and g.adjacent(r, w):
                        t.fail(f"part 5: triangle {w}-{z}-{r} at basis vertex {w}")


@_register("thm4", "dim_wt = 2: no complete vertex of degree > 3", applies=_dimwt2, corpora=BOTH)
def _thm4(f: GraphFacts, t: Tally) -> None:
    for v in range(f.g.n):
        if f.g.degrees[v] > 3 and is_complete_vertex(f.g, v):
            t.fail(f"complete vertex {v} of degree {f.g.degrees[v]}")


@_register("cor2", "dim_wt = 2: chi <= 4 and clique number <= 4", applies=_dimwt2, corpora=BOTH)
def _cor2(f: GraphFacts, t: Tally) -> None:
    if f.chi is None:
        t.count("skipped_above_color_limit")
        return
    if f.chi > 4:
        t.fail(f"chi={f.chi}")
    if f.omega > 4:
        t.fail(f"omega={f.omega}")


@_register("thm5", "dim_wt(G) = n iff every vertex is a twin", corpora=BOTH)
def _thm5(f: GraphFacts, t: Tally) -> None:
    lhs = f.dim_wt == f.g.n
    rhs = len(f.twins) == f.g.n
    t.count("dim_wt_equals_n", lhs)
    if lhs != rhs:
        t.fail(f"dim_wt={f.dim_wt}, n={f.g.n}, twins={sorted(f.twins)}")


@_register("prop-lowerbound", "n >= 3 implies res_wt >= 3", corpora=BOTH)
def _res_lower(f: GraphFacts, t: Tally) -> None:
    if f.g.n >= 3 and f.res_wt < 3:
        t.fail(f"res_wt={f.res_wt}")


@_register("twins-resn", "n >= 3: res_wt = n iff G contains a twin", corpora=BOTH)
def _twins_resn(f: GraphFacts, t: Tally) -> None:
    if f.g.n < 3:
        return
    lhs = f.res_wt == f.g.n
    t.count("res_wt_equals_n", lhs)
    if lhs != bool(f.twins):
        t.fail(f"res_wt={f.res_wt}, n={f.g.n}, twins={sorted(f.twins)}")


@_register("cor3", "randomly weak total n-dimensional iff every vertex is a twin", corpora=BOTH)
def _cor3(f: GraphFacts, t: Tally) -> None:
    lhs = f.dim_wt == f.res_wt == f.g.n
    if lhs != (len(f.twins) == f.g.n):
        t.fail(f"dim_wt={f.dim_wt}, res_wt={f.res_wt}, twins={sorted(f.twins)}")


@_register("cor-randomly-n-1", "randomly weak total (n-1)-dimensional iff dim_wt = n-1 and no twin", corpora=BOTH)
def _cor_n1(f: GraphFacts, t: Tally) -> None:
    n = f.g.n
    if n < 3:
        return
    lhs = f.dim_wt == f.res_wt == n - 1
    rhs = f.dim_wt == n - 1 and not f.twins
    if lhs != rhs:
        t.fail(f"dim_wt={f.dim_wt}, res_wt={f.res_wt}, twins={sorted(f.twins)}")


@_register("common-neighbors", "res_wt = k implies every two vertices share at most k - 2 neighbours", corpora=BOTH)
def _common(f: GraphFacts, t: Tally) -> None:
    g = f.g
    worst = max(common_neighbors(g, u, v) for u in range(g.n) for v in range(u + 1, g.n))
    if worst > f.res_wt - 2:
        t.fail(f"{worst} common neighbours, res_wt={f.res_wt}")


@_register("res3-classification", "res_wt = 3 iff G is an odd cycle or a path of order >= 3", corpora=BOTH)
def _res3(f: GraphFacts, t: Tally) -> None:
    if f.g.n < 3:
        return
    lhs = f.res_wt == 3
    rhs = (f.is_cycle and f.g.n % 2 == 1) or f.is_path
    t.count("res_wt_equals_3", lhs)
    if lhs != rhs:
        t.fail(f"res_wt={f.res_wt}; odd cycle or path: {rhs}")


@_register("cor4", "randomly weak total 3-dimensional iff G is an odd cycle", corpora=BOTH)
def _cor4(f: GraphFacts, t: Tally) -> None:
    lhs = f.dim_wt == f.res_wt == 3
    rhs = f.is_cycle and f.g.n % 2 == 1
    if lhs != rhs:
        t.fail(f"dim_wt={f.dim_wt}, res_wt={f.res_wt}; odd cycle: {rhs}")


@_register("cycle-dimwt-3", "dim_wt(C_n) = 3", applies=lambda f: f.is_cycle, corpora=BOTH)
def _cycle3(f: GraphFacts, t: Tally) -> None:
    if f.dim_wt == 3:
        return
    if f.g.n == 4:
        t.note(f"C_4 has dim_wt = {f.dim_wt} = n: all four vertices are twins")
    else:
        t.fail(f"dim_wt(C_{f.g.n}) = {f.dim_wt}")


@_register("thm8", "res_wt = k implies Delta <= 2^(k-1) + k - 1", corpora=BOTH)
def _thm8(f: GraphFacts, t: Tally) -> None:
    k = f.res_wt
    if f.g.max_degree > 2 ** (k - 1) + k - 1:
        t.fail(f"Delta={f.g.max_degree}, res_wt={k}")


# ---------------------------------------------------------------- trees


@_register("tree-dim-formula", "non-path tree: dim = sigma - ex", applies=_npt, corpora=TREES)
def _tree_dim(f: GraphFacts, t: Tally) -> None:
    got = tree_metric_dimension(f.decomposition)
    if got != f.dim:
        t.fail(f"sigma-ex={got}, brute force dim={f.dim}")


@_register("dimwt-formula", "non-path tree: dim_wt = dim + mu", applies=_npt, corpora=TREES)
def _dimwt_formula(f: GraphFacts, t: Tally) -> None:
    got = tree_weak_total_dimension(f.decomposition)
    t.count(f"mu={f.decomposition.mu}")
    if got != f.dim_wt:
        t.fail(f"dim+mu={got}, brute force dim_wt={f.dim_wt}")


@_register("construct-wtmb", "the constructed set is a WTR-set of size dim_wt", applies=_npt, corpora=TREES)
def _construct(f: GraphFacts, t: Tally) -> None:
    W = construct_wtmb(f.decomposition)
    if not is_wtr_set(f.g, W):
        t.fail(f"constructed {list(W)} is not a WTR-set")
    if len(W) != f.dim_wt:
        t.fail(f"constructed size {len(W)} != dim_wt {f.dim_wt}")


@_register("thm1-tree-dimwt2", "non-path tree: dim_wt = 2 iff the branch-count characterization holds", applies=_npt, corpora=TREES)
def _thm1(f: GraphFacts, t: Tally) -> None:
    lhs = f.dim_wt == 2
    t.count("dim_wt_equals_2", lhs)
    if lhs != tree_dimwt2_characterization(f.decomposition):
        t.fail(f"dim_wt={f.dim_wt} but characterization says {not lhs}")


@_register("remark-terminal-paths", "every resolving set meets >= t-1 branches (beyond v) of each exterior major with t >= 2 branches", applies=_npt, corpora=TREES)
def _remark_terminal(f: GraphFacts, t: Tally) -> None:
    if not f.exhaustive:
        t.count("skipped_above_subset_cap")
        return
    sets = np.flatnonzero(f.resolving_flags)
    for m, bms in _branch_masks(f):
        met = sum(((sets & b) != 0).astype(int) for b in bms)
        if (met < m.t - 1).any():
            t.fail(f"resolving set {bin(int(sets[np.argmax(met < m.t - 1)]))} meets < t-1 branches of {m.vertex}")


@_register("prop2", "a WTR-set meeting a branch beyond v meets every strictly longer branch of v", applies=_npt, corpora=TREES)
def _prop2(f: GraphFacts, t: Tally) -> None:
    if not f.exhaustive:
        t.count("skipped_above_subset_cap")
        return
    sets = np.flatnonzero(f.wtr_flags)
    for m, bms in _branch_masks(f):
        for r, s in itertools.permutations(range(m.t), 2):
            if m.lengths[r] < m.lengths[s]:
                bad = ((sets & bms[r]) != 0) & ((sets & bms[s]) == 0)
                if bad.any():
                    t.fail(f"WTR-set {bin(int(sets[np.argmax(bad)]))} meets branch {r} but not longer branch {s} of {m.vertex}")
                    return


def _hits(W: tuple[int, ...], branch) -> list[int]:
    """1-based positions (owner = 1) of W's vertices on a branch, owner excluded."""
    S = set(W)
    return [j + 1 for j, x in enumerate(branch.vertices) if j > 0 and x in S]


@_register("wtmb-unique-branch", "WTMB and exterior major with unique shortest branch P_1: exactly one vertex in each other branch, at position > l_1", applies=_npt, corpora=TREES)
def _wtmb_unique(f: GraphFacts, t: Tally) -> None:
    for W in f.wtmbs:
        for m in f.decomposition.majors:
            if not m.has_unique_shortest:
                continue
            l1 = m.lengths[0]
            for b in m.branches[1:]:
                h = _hits(W, b)
                if len(h) != 1 or h[0] <= l1:
                    t.fail(f"WTMB {list(W)} meets branch to {b.terminal} of {m.vertex} at positions {h} (l_1={l1})")


@_register("wtmb-no-unique-branch", "WTMB and exterior major without unique shortest branch: a vertex at position >= 2 in every branch", applies=_npt, corpora=TREES)
def _wtmb_no_unique(f: GraphFacts, t: Tally) -> None:
    for W in f.wtmbs:
        for m in f.decomposition.majors:
            if m.has_unique_shortest is not False:
                continue
            for b in m.branches:
                h = _hits(W, b)
                if len(h) > 1:
                    # the stronger "exactly one" wording
                    t.count("branches_with_several_basis_vertices")
                if not h:
                    t.fail(f"WTMB {list(W)} misses branch to {b.terminal} of {m.vertex}")


@_register("cor-upper-dimwt-dim", "exterior major with t branches and no unique shortest: dim >= t-1 and dim_wt >= t", applies=_npt, corpora=TREES)
def _cor_upper(f: GraphFacts, t: Tally) -> None:
    for m in f.decomposition.majors:
        if m.has_unique_shortest is False and (f.dim < m.t - 1 or f.dim_wt < m.t):
            t.fail(f"major {m.vertex} with t={m.t}: dim={f.dim}, dim_wt={f.dim_wt}")


@_register("cor-all-branches", "a set meeting every branch of every exterior major beyond the major is a WTR-set", applies=_npt, corpora=TREES)
def _cor_all(f: GraphFacts, t: Tally) -> None:
    # minimal such sets suffice: supersets of WTR-sets are WTR-sets
    choices = [b.vertices[1:] for b in f.decomposition.branches]
    if np.prod([len(c) for c in choices], dtype=float) > 4096:
        t.count("skipped_too_many_choices")
        return
    for pick in itertools.product(*choices):
        if not is_wtr_set(f.g, sorted(set(pick))):
            t.fail(f"{sorted(set(pick))} meets every branch but is not a WTR-set")
            return


@_register("prop-n-theta", "non-path tree with n >= 4: every (n - theta + 2)-subset is a WTR-set", applies=_npt, corpora=TREES)
def _n_theta(f: GraphFacts, t: Tally) -> None:
    k = f.g.n - f.decomposition.theta + 2
    if k > f.g.n:
        return
    masks = _sized_masks(f.g.n, k, ())
    ok = _classify(masks, f.table, True)
    if not ok.all():
        bad = np.flatnonzero(masks[np.argmin(ok)]).tolist()
        t.fail(f"{k}-subset {bad} is not a WTR-set (theta={f.decomposition.theta})")


@_register("thm-reswt-upper", "non-path tree: res_wt <= n - theta + 2", applies=_npt, corpora=TREES)
def _res_upper(f: GraphFacts, t: Tally) -> None:
    upper = tree_reswt_bounds(f.decomposition)[1]
    t.count("tight", f.res_wt == upper)
    if f.res_wt > upper:
        t.fail(f"res_wt={f.res_wt} > n-theta+2={upper}")


@_register("prop7-lower", "non-path tree: sum over branches of (l - 1) <= res_wt", applies=_npt, corpora=TREES)
def _res_lower_tree(f: GraphFacts, t: Tally) -> None:
    lower = tree_reswt_bounds(f.decomposition)[0]
    alt = tree_reswt_bounds_multi_branch_only(f.decomposition)[0]
    t.count("tight", f.res_wt == lower)
    if lower != alt:
        t.count("single_branch_majors_change_bound")
    if f.res_wt < lower:
        also = "also" if f.res_wt < alt else "but not"
        t.fail(f"res_wt={f.res_wt} < sum(l-1)={lower} ({also} below the multi-branch-only sum {alt})")


@_register("thm-bounds", "non-path tree: sum(l - 1) <= res_wt <= n - theta + 2", applies=_npt, corpora=TREES)
def _bounds(f: GraphFacts, t: Tally) -> None:
    lower, upper = tree_reswt_bounds(f.decomposition)
    t.count("lower_tight", f.res_wt == lower)
    t.count("upper_tight", f.res_wt == upper)
    alt = tree_reswt_bounds_multi_branch_only(f.decomposition)
    if alt != (lower, upper):
        t.count("single_branch_majors_change_bounds")
    if not lower <= f.res_wt <= upper:
        t.fail(f"res_wt={f.res_wt} outside [{lower}, {upper}]")


# ---------------------------------------------------------------- sweeps


def _sweep_graph(t: Tally, g: Graph) -> None:
    t._current = to_graph6(g)
    t.applicable += 1


@_register_sweep("thm9-realization", "for 3 <= a <= b <= 8 the construction has dim_wt = a and res_wt = b")
def _thm9(t: Tally, top: int = 8) -> None:
    for a in range(3, top + 1):
        for b in range(a, top + 1):
            g = C.thm9_realization(a, b)
            _sweep_graph(t, g)
            p = profile(g)
            if (p.dim_wt, p.res_wt) != (a, b):
                t.fail(f"(a,b)=({a},{b}) gives (dim_wt,res_wt)=({p.dim_wt},{p.res_wt})")


@_register_sweep("thm6-realization", "for 2 <= a <= b <= 9 the construction has order b and dim_wt = a")
def _thm6(t: Tally, top: int = 9) -> None:
    for a in range(2, top + 1):
        for b in range(a, top + 1):
            g = C.thm6_realization(a, b)
            _sweep_graph(t, g)
            p = profile(g)
            if (p.dim_wt, g.n) != (a, b):
                t.fail(f"(a,b)=({a},{b}) gives dim_wt={p.dim_wt}, order={g.n}")


@_register_sweep("double-spider", "double spider with parameter r: mu = 2, dim_wt = 4, res_wt = 2(r+1)")
def _double_spider(t: Tally, rs: Iterable[int] = (3, 4, 5)) -> None:
    for r in rs:
        g = C.double_spider(r)
        _sweep_graph(t, g)
        mu = decompose_tree(g).mu
        p = profile(g, limit=None)
        if (mu, p.dim_wt, p.res_wt) != (2, 4, 2 * (r + 1)):
            t.fail(f"r={r}: (mu,dim_wt,res_wt)=({mu},{p.dim_wt},{p.res_wt})")


@_register_sweep("named-values", "named examples: K_r+(K_1 u K_s), stars, two triangles joined by a path")
def _named_values(t: Tally) -> None:
    for r, s in itertools.product((2, 3), repeat=2):
        g = C.join_kr_k1_ks(r, s)
        _sweep_graph(t, g)
        p = profile(g)
        if (p.dim, p.dim_wt) != (g.n - 2, g.n - 1):
            t.fail(f"K_{r}+(K_1 u K_{s}): dim={p.dim}, dim_wt={p.dim_wt}, n={g.n}")
    for a in range(3, 7):
        g = C.star(a)
        _sweep_graph(t, g)
        p = profile(g)
        if (p.dim, p.dim_wt, p.res_wt) != (a - 1, a, a + 1):
            t.fail(f"K_1,{a}: (dim,dim_wt,res_wt)=({p.dim},{p.dim_wt},{p.res_wt})")
    for a in (2, 3, 4):
        g = C.double_k3_path(a)
        _sweep_graph(t, g)
        p = profile(g)
        ll = [g.labels.index("l"), g.labels.index("l'")]
        if (p.dim, p.dim_wt) != (2, 2) or not (is_resolving_set(g, ll) and is_wtr_set(g, ll)):
            t.fail(f"double K3 path a={a}: dim={p.dim}, dim_wt={p.dim_wt}")


# ---------------------------------------------------------------- corpora and driver


@dataclass
class Corpus:
    description: str
    factory: Callable[[], Iterable[Graph]]
    kind: str = "graphs"

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.factory())

    @classmethod
    def of(cls, graphs: Iterable[Graph], description: str = "given graphs", kind: str = "graphs") -> "Corpus":
        graphs = list(graphs)
        return cls(f"{description} ({len(graphs)} graphs)", lambda: graphs, kind)


def graph_corpus(max_n: int = 6, min_n: int = 2) -> Corpus:
    return Corpus(
        f"all connected labelled graphs, {min_n} <= n <= {max_n}",
        lambda: itertools.chain.from_iterable(C.all_connected_graphs(n) for n in range(min_n, max_n + 1)),
        "graphs",
    )


def tree_corpus(max_exhaustive: int = 8, random_orders: Iterable[int] = range(9, 15), count: int = 10_000, seed: int = 0) -> Corpus:
    random_orders = list(random_orders)

    def gen():
        for n in range(2, max_exhaustive + 1):
            yield from C.all_labeled_trees(n)
        for n in random_orders:
            yield from C.random_trees(n, count, seed)

    extra = f" + {count} uniform random trees for each n in {random_orders} (seed {seed})" if random_orders else ""
    return Corpus(f"all labelled trees, n <= {max_exhaustive}{extra}", gen, "trees")


@dataclass
class TheoremReport:
    theorem_id: str
    statement: str
    corpus: str
    graphs: int
    applicable: int
    verdict: str
    violations: int
    counterexamples: list[dict]
    scope_notes: list[dict]
    stats: dict[str, int]
    runtime: float

    def to_record(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "statement": self.statement,
            "corpus": {"description": self.corpus, "graphs": self.graphs, "applicable": self.applicable},
            "verdict": self.verdict,
            "violations": self.violations,
            "counterexamples": self.counterexamples,
            "scope_notes": self.scope_notes,
            "stats": self.stats,
            "runtime": round(self.runtime, 3),
        }


def _resolve_selection(selection: Iterable[str] | None) -> list[Checker]:
    if selection is None:
        return list(CHECKERS.values())
    ids = list(selection)
    if not ids:
        raise ValueError("empty theorem selection")
    unknown = [i for i in ids if i not in CHECKERS]
    if unknown:
        raise UnknownTheoremId(f"unknown theorem id(s): {', '.join(unknown)}")
    return [CHECKERS[i] for i in ids]


def _run_chunk(graphs: list[Graph], ids: list[str], subset_cap: int, limit: int) -> tuple[int, dict[str, Tally]]:
    tallies = {i: Tally(limit=limit) for i in ids}
    checkers = [CHECKERS[i] for i in ids]
    for g in graphs:
        f = GraphFacts(g, subset_cap)
        for c in checkers:
            t = tallies[c.id]
            start = time.perf_counter()
            if c.applies(f):
                t.applicable += 1
                t._current = f.graph6
                c.check(f, t)
            t.seconds += time.perf_counter() - start
    return len(graphs), tallies


def _chunks(it: Iterable[Graph], size: int) -> Iterator[list[Graph]]:
    it = iter(it)
    while chunk := list(itertools.islice(it, size)):
        yield chunk


def _verdict(t: Tally) -> str:
    if t.violations:
        return "fail"
    return "scope-note" if t.scope_notes else "pass"


def run_suite(
    corpus: Corpus | Iterable[Graph],
    selection: Iterable[str] | None = None,
    jobs: int = 1,
    subset_cap: int = 12,
    max_counterexamples: int = 20,
    chunk_size: int = 2000,
) -> list[TheoremReport]:
    """Run the selected checkers (all when ``selection`` is None) over ``corpus``.

    Sweep checkers ignore the corpus.  Results are aggregated in corpus
    order, so reports do not depend on ``jobs``.
    """
    checkers = _resolve_selection(selection)
    if not isinstance(corpus, Corpus):
        corpus = Corpus.of(corpus)
    graph_ids = [c.id for c in checkers if c.sweep is None]
    totals = {i: Tally(limit=max_counterexamples) for i in graph_ids}
    seen = 0
    if graph_ids:
        chunks = _chunks(corpus, chunk_size)
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = pool.map(_run_chunk, chunks, itertools.repeat(graph_ids), itertools.repeat(subset_cap), itertools.repeat(max_counterexamples))
                for count, tallies in results:
                    seen += count
                    for i in graph_ids:
                        totals[i].merge(tallies[i])
        else:
            for chunk in chunks:
                count, tallies = _run_chunk(chunk, graph_ids, subset_cap, max_counterexamples)
                seen += count
                for i in graph_ids:
                    totals[i].merge(tallies[i])
    reports = []
    for c in checkers:
        if c.sweep is not None:
            t = Tally(limit=max_counterexamples)
            start = time.perf_counter()
            c.sweep(t)
            t.seconds = time.perf_counter() - start
            desc, count = "parameter sweep", t.applicable
        else:
            t, desc, count = totals[c.id], corpus.description, seen
        reports.append(
            TheoremReport(c.id, c.statement, desc, count, t.applicable, _verdict(t), t.violations, t.counterexamples, t.scope_notes, t.stats, t.seconds)
        )
    return reports


def default_plan(max_n: int = 6, tree_count: int = 10_000, seed: int = 0, max_tree_n: int = 8) -> list[tuple[Corpus, list[str]]]:
    """General-graph checkers on the graph corpus, tree checkers (and the
    general bounds that make sense on trees) on the tree corpus, sweeps once."""
    graphs = graph_corpus(max_n)
    trees = tree_corpus(max_tree_n, range(9, 15) if tree_count else [], tree_count, seed)
    g_ids = [c.id for c in CHECKERS.values() if "graphs" in c.corpora]
    t_ids = [c.id for c in CHECKERS.values() if "trees" in c.corpora]
    s_ids = [c.id for c in CHECKERS.values() if c.sweep is not None]
    return [(graphs, g_ids + s_ids), (trees, t_ids)]


def format_table(reports: list[TheoremReport]) -> str:
    rows = [("theorem", "verdict", "applicable", "violations", "seconds")]
    for r in reports:
        rows.append((r.theorem_id, r.verdict, str(r.applicable), str(r.violations), f"{r.runtime:.2f}"))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
