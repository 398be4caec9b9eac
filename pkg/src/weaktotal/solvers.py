"""Exact brute-force solvers for dim, dim_wt, res_wt, chi and omega.

Subsets are evaluated in batches.  For a graph with distance matrix ``D``
let ``R(u, v) = {w : D[u, w] != D[v, w]}`` be the resolvers of the pair
``{u, v}``.  A set ``W`` is resolving iff it meets every ``R(u, v)``, and it
is weak total resolving iff additionally ``|W & R(u, v)| >= 2`` whenever
exactly one of ``u, v`` lies in ``W`` (``R(u, v)`` always contains both
``u`` and ``v``).  One matrix product of subset indicator rows against the
resolver table therefore classifies a whole batch of subsets.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .graph import Graph, find_twins
from .resolving import VertexSet, is_wtr_set

DIM_LIMIT = 20
RESWT_LIMIT = 16
COLOR_LIMIT = 16

_CHUNK = 1 << 14


class TooLarge(ValueError):
    pass


def _check_limit(g: Graph, limit: int | None, what: str) -> None:
    if limit is not None and g.n > limit:
        raise TooLarge(f"{what}: n={g.n} exceeds the limit of {limit}")


@dataclass(frozen=True)
class PairTable:
    """Resolver indicator rows for all unordered vertex pairs."""

    iu: np.ndarray
    iv: np.ndarray
    resolvers: np.ndarray  # (pairs, n) float32, 1.0 where w resolves the pair

    @classmethod
    def of(cls, g: Graph) -> "PairTable":
        d = g.distances
        iu, iv = np.triu_indices(g.n, 1)
        return cls(iu, iv, (d[iu] != d[iv]).astype(np.float32))

    @property
    def sizes(self) -> np.ndarray:
        return self.resolvers.sum(axis=1).astype(np.int64)


def _classify(masks: np.ndarray, table: PairTable, total: bool) -> np.ndarray:
    """Boolean flag per row of ``masks`` (0/1 uint8 array of shape (N, n))."""
    out = np.empty(len(masks), dtype=bool)
    rt = table.resolvers.T
    for lo in range(0, len(masks), _CHUNK):
        m = masks[lo : lo + _CHUNK]
        counts = m.astype(np.float32) @ rt
        if total:
            need = 1 + (m[:, table.iu] != m[:, table.iv])
            out[lo : lo + _CHUNK] = (counts >= need).all(axis=1)
        else:
            out[lo : lo + _CHUNK] = (counts >= 1).all(axis=1)
    return out


@lru_cache(maxsize=256)
def combination_masks(n: int, k: int) -> np.ndarray:
    """All k-subsets of ``range(n)`` as indicator rows, lexicographic order."""
    total = math.comb(n, k)
    idx = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(n), k)),
        dtype=np.int64,
        count=total * k,
    ).reshape(total, k)
    masks = np.zeros((total, n), dtype=np.uint8)
    if k:
        np.put_along_axis(masks, idx, 1, axis=1)
    masks.setflags(write=False)
    return masks


@lru_cache(maxsize=32)
def all_masks(n: int) -> np.ndarray:
    """Every subset of ``range(n)``; row ``i`` is the bit pattern of integer ``i``."""
    ints = np.arange(1 << n, dtype=np.int64)
    masks = ((ints[:, None] >> np.arange(n)) & 1).astype(np.uint8)
    masks.setflags(write=False)
    return masks


def _rows_to_sets(rows: np.ndarray) -> list[VertexSet]:
    return [VertexSet(tuple(int(i) for i in np.flatnonzero(r))) for r in rows]


def _sized_masks(n: int, k: int, fixed: tuple[int, ...]) -> np.ndarray:
    """k-subsets containing every vertex of ``fixed``, lexicographic order."""
    if not fixed:
        return combination_masks(n, k)
    free = [v for v in range(n) if v not in set(fixed)]
    sub = combination_masks(len(free), k - len(fixed))
    masks = np.zeros((len(sub), n), dtype=np.uint8)
    masks[:, free] = sub
    masks[:, list(fixed)] = 1
    return masks


def _minimum(g: Graph, total: bool, start: int, fixed: tuple[int, ...], every: bool):
    table = PairTable.of(g)
    for k in range(max(start, len(fixed), 1), g.n + 1):
        masks = _sized_masks(g.n, k, fixed)
        ok = _classify(masks, table, total)
        if ok.any():
            rows = masks[ok] if every else masks[np.argmax(ok)][None, :]
            return k, _rows_to_sets(rows)
    raise AssertionError("V(G) is always (weak total) resolving")


def metric_dimension(g: Graph, limit: int | None = DIM_LIMIT) -> tuple[int, VertexSet]:
    """``(dim, basis)`` with the lexicographically first minimum resolving set."""
    _check_limit(g, limit, "metric_dimension")
    k, sets = _minimum(g, False, 1, (), False)
    return k, sets[0]


def metric_bases(g: Graph, limit: int | None = DIM_LIMIT) -> list[VertexSet]:
    _check_limit(g, limit, "metric_bases")
    return _minimum(g, False, 1, (), True)[1]


def weak_total_metric_dimension(
    g: Graph, prune_twins: bool = True, limit: int | None = DIM_LIMIT
) -> tuple[int, VertexSet]:
    """``(dim_wt, WTMB)``; the basis is the lexicographically first minimum WTR-set.

    With ``prune_twins`` every twin is fixed inside each candidate (every
    WTR-set contains all twins) and only the remaining vertices are
    enumerated.  ``prune_twins=False`` is the unpruned reference search.
    """
    _check_limit(g, limit, "weak_total_metric_dimension")
    fixed = tuple(sorted(find_twins(g).vertices)) if prune_twins else ()
    k, sets = _minimum(g, True, 1, fixed, False)
    return k, sets[0]


def weak_total_metric_bases(
    g: Graph, prune_twins: bool = True, limit: int | None = DIM_LIMIT
) -> list[VertexSet]:
    """Every minimum WTR-set, lexicographic order."""
    _check_limit(g, limit, "weak_total_metric_bases")
    fixed = tuple(sorted(find_twins(g).vertices)) if prune_twins else ()
    return _minimum(g, True, 1, fixed, True)[1]


def largest_non_wtr_size(g: Graph) -> int:
    """Largest cardinality of a subset that is not a WTR-set, by descending search."""
    table = PairTable.of(g)
    for s in range(g.n - 1, 0, -1):
        if not _classify(combination_masks(g.n, s), table, True).all():
            return s
    return 0


def weak_total_resolving_number(
    g: Graph, method: str = "pairs", limit: int | None = RESWT_LIMIT
) -> int:
    """Least ``r`` such that every ``r``-subset is a WTR-set.

    ``method``:

    ``"direct"``
        the definition: try ``r = 1, 2, ...`` and test every ``r``-subset
        with the scalar predicate.
    ``"descending"``
        non-WTR sets are closed under taking subsets, so the answer is one
        more than the largest non-WTR subset, found by descending search.
    ``"pairs"``
        the maximal non-WTR sets are ``(V - R(u, v)) + {v}``, hence the
        answer is ``n + 2 - min |R(u, v)|``; no subset enumeration.  Not
        subject to ``limit``.
    """
    if method == "pairs":
        return int(g.n + 2 - PairTable.of(g).sizes.min())
    _check_limit(g, limit, "weak_total_resolving_number")
    if method == "descending":
        return largest_non_wtr_size(g) + 1
    if method == "direct":
        for r in range(1, g.n + 1):
            if all(is_wtr_set(g, c) for c in itertools.combinations(range(g.n), r)):
                return r
        raise AssertionError("V(G) is always a WTR-set")
    raise ValueError(f"unknown method {method!r}")


def is_randomly_weak_total_k(g: Graph) -> tuple[bool, int | None]:
    k, _ = weak_total_metric_dimension(g)
    if k == weak_total_resolving_number(g):
        return True, k
    return False, None


@dataclass
class ResolvabilityProfile:
    n: int
    dim: int
    dim_wt: int
    res_wt: int
    metric_bases: list[VertexSet]
    wtmbs: list[VertexSet]
    twins: list[int]
    notes: list[str] = field(default_factory=list)

    @property
    def is_randomly_wt_k(self) -> bool:
        return self.dim_wt == self.res_wt

    @property
    def randomly_wt_k(self) -> int | None:
        return self.dim_wt if self.is_randomly_wt_k else None


def profile(g: Graph, max_bases: int | None = None, limit: int | None = DIM_LIMIT) -> ResolvabilityProfile:
    """All three parameters with their minimum witnesses.

    Small graphs (``n <= 12``) are classified in a single pass over all
    ``2^n`` subsets; larger ones use size-ascending search.
    """
    _check_limit(g, limit, "profile")
    twins = sorted(find_twins(g).vertices)
    if g.n <= 12:
        masks = all_masks(g.n)
        table = PairTable.of(g)
        res = _classify(masks, table, False)
        wtr = _classify(masks, table, True)
        size = masks.sum(axis=1)
        dim = int(size[res].min())
        dim_wt = int(size[wtr].min())
        # reorder witnesses lexicographically
        bases = sorted(_rows_to_sets(masks[res & (size == dim)]), key=lambda s: s.members)
        wtmbs = sorted(_rows_to_sets(masks[wtr & (size == dim_wt)]), key=lambda s: s.members)
    else:
        dim, bases = _minimum(g, False, 1, (), True)
        dim_wt, wtmbs = _minimum(g, True, dim, tuple(twins), True)
    res_wt = weak_total_resolving_number(g)
    notes = []
    if g.n == 2:
        notes.append("res_wt for n = 2 is outside the n >= 3 range treated by the theory; value follows the definition")
    if max_bases is not None:
        bases, wtmbs = bases[:max_bases], wtmbs[:max_bases]
    return ResolvabilityProfile(g.n, dim, dim_wt, res_wt, bases, wtmbs, twins, notes)


def clique_number(g: Graph, limit: int | None = COLOR_LIMIT) -> int:
    _check_limit(g, limit, "clique_number")
    nm = g.neighbor_masks
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(size + 1, cand & nm[v])
            cand ^= low

    expand(0, (1 << g.n) - 1)
    return best


def _colorable(g: Graph, k: int, order: list[int]) -> bool:
    colors = [-1] * g.n
    nbrs = g.neighbors

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[w] for w in nbrs[v]}
        # symmetry breaking: a fresh colour is only tried once
        for c in range(min(used + 1, k)):
            if c not in taken:
                colors[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph, limit: int | None = COLOR_LIMIT) -> int:
    """Exact chromatic number: smallest k, starting at omega, admitting a colouring."""
    _check_limit(g, limit, "chromatic_number")
    order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    k = clique_number(g, limit=None)
    while not _colorable(g, k, order):
        k += 1
    return k
