"""Branch decomposition of non-path trees and the closed forms built on it.

Each leaf of a non-path tree is a terminal vertex of exactly one exterior
major vertex; the leaf's branch is the path from that owner to the leaf.
Branch lengths count vertices, owner included.  Branches of one owner are
sorted by length, ties broken by the terminal vertex id.

Exterior majors owning a single branch (terminal degree 1) take part in
``theta`` and the lower bound sum but never in the unique-shortest / ``mu``
judgements; their ``has_unique_shortest`` is ``None``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .graph import Graph, GraphError, is_path, is_tree, terminal_assignment
from .resolving import VertexSet


class NotATree(GraphError):
    pass


class IsAPath(GraphError):
    pass


@dataclass(frozen=True)
class Branch:
    owner: int
    vertices: tuple[int, ...]  # owner first, terminal leaf last

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def terminal(self) -> int:
        return self.vertices[-1]


@dataclass(frozen=True)
class ExteriorMajor:
    vertex: int
    branches: tuple[Branch, ...]

    @property
    def t(self) -> int:
        return len(self.branches)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(b.length for b in self.branches)

    @property
    def has_unique_shortest(self) -> bool | None:
        if self.t < 2:
            return None
        return self.lengths[0] < self.lengths[1]

    @property
    def similar_groups(self) -> list[list[int]]:
        """Indices of branches sharing a length, for lengths occurring at least twice."""
        groups = []
        for _, grp in groupby(range(self.t), key=lambda i: self.lengths[i]):
            grp = list(grp)
            if len(grp) >= 2:
                groups.append(grp)
        return groups

    @property
    def twin_leaves(self) -> bool:
        """At least two leaves hang directly at this vertex (they are twins)."""
        return self.lengths.count(2) >= 2


@dataclass(frozen=True)
class TreeDecomposition:
    n: int
    majors: tuple[ExteriorMajor, ...]

    @property
    def branches(self) -> list[Branch]:
        return [b for m in self.majors for b in m.branches]

    @property
    def sigma(self) -> int:
        return sum(m.t for m in self.majors)

    @property
    def ex(self) -> int:
        return len(self.majors)

    @property
    def mu(self) -> int:
        return sum(1 for m in self.majors if m.has_unique_shortest is False)

    @property
    def theta(self) -> int:
        return min(b.length for b in self.branches)

    def major(self, v: int) -> ExteriorMajor:
        for m in self.majors:
            if m.vertex == v:
                return m
        raise KeyError(v)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "sigma": self.sigma,
            "ex": self.ex,
            "mu": self.mu,
            "theta": self.theta,
            "exterior_majors": [
                {
                    "vertex": m.vertex,
                    "terminal_degree": m.t,
                    "unique_shortest": m.has_unique_shortest,
                    "twin_leaves": m.twin_leaves,
                    "similar_groups": m.similar_groups,
                    "branches": [{"vertices": list(b.vertices), "length": b.length} for b in m.branches],
                }
                for m in self.majors
            ],
        }


def decompose_tree(g: Graph) -> TreeDecomposition:
    if not is_tree(g):
        raise NotATree(f"graph with n={g.n}, m={g.m} is not a tree")
    if is_path(g):
        raise IsAPath("paths have no major vertices")
    terminal_of, td = terminal_assignment(g)
    owned: dict[int, list[Branch]] = {v: [] for v, t in td.items() if t > 0}
    for leaf, owner in enumerate(terminal_of):
        if owner is None:
            if g.degrees[leaf] == 1:
                raise AssertionError(f"leaf {leaf} has no strictly nearest major vertex")
            continue
        walk = [leaf]
        prev, cur = -1, leaf
        while cur != owner:
            nxt = [w for w in g.neighbors[cur] if w != prev]
            if len(nxt) != 1:
                raise AssertionError(f"branch from leaf {leaf} passes a vertex of degree {g.degrees[cur]}")
            prev, cur = cur, nxt[0]
            walk.append(cur)
        owned[owner].append(Branch(owner, tuple(reversed(walk))))
    majors = tuple(
        ExteriorMajor(v, tuple(sorted(bs, key=lambda b: (b.length, b.terminal))))
        for v, bs in sorted(owned.items())
    )
    return TreeDecomposition(g.n, majors)


def tree_metric_dimension(td: TreeDecomposition) -> int:
    return td.sigma - td.ex


def tree_weak_total_dimension(td: TreeDecomposition) -> int:
    return tree_metric_dimension(td) + td.mu


def construct_wtmb(td: TreeDecomposition) -> VertexSet:
    """Terminal vertices of every branch, except the unique shortest one where it exists."""
    picked = []
    for m in td.majors:
        if m.t < 2:
            continue
        chosen = m.branches[1:] if m.has_unique_shortest else m.branches
        picked.extend(b.terminal for b in chosen)
    return VertexSet(tuple(sorted(picked)))


def tree_reswt_bounds(td: TreeDecomposition) -> tuple[int, int]:
    """``(sum of (l - 1) over all branches, n - theta + 2)``."""
    lower = sum(b.length - 1 for b in td.branches)
    return lower, td.n - td.theta + 2


def tree_reswt_bounds_multi_branch_only(td: TreeDecomposition) -> tuple[int, int]:
    """Same bounds counting only exterior majors with at least two branches."""
    bs = [b for m in td.majors if m.t >= 2 for b in m.branches]
    return sum(b.length - 1 for b in bs), td.n - min(b.length for b in bs) + 2


def tree_dimwt2_characterization(td: TreeDecomposition) -> bool:
    multi = [m for m in td.majors if m.t >= 2]
    if any(m.t > 3 or not m.has_unique_shortest for m in multi):
        return False
    threes = sum(1 for m in multi if m.t == 3)
    twos = sum(1 for m in multi if m.t == 2)
    return (threes == 1 and twos == 0) or (twos == 2 and threes == 0)
