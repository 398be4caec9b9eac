"""Distance codes and (weak total) resolving-set predicates.

Two independent formulations of the weak total condition live here:

* :func:`is_wtr_set` checks the definition literally: for each member
  ``v`` and each outside vertex ``u`` some *other* member separates them.
* :func:`is_wtr_set_via_lemma1` works on code vectors: every outside code
  must differ from every inside code in at least two coordinates.

They must always agree; the solvers use a third, vectorised route
(see :mod:`weaktotal.solvers`).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph


class NotResolving(ValueError):
    """Raised by :func:`wtr_violations` when the set does not even resolve.

    ``pairs`` lists the vertex pairs sharing a code.
    """

    def __init__(self, pairs: list[tuple[int, int]]):
        self.pairs = pairs
        super().__init__(f"set is not resolving; {len(pairs)} unresolved pair(s), first {pairs[:3]}")


@dataclass(frozen=True)
class VertexSet:
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.members)) != len(self.members):
            raise ValueError(f"repeated vertex in {self.members}")
        if any(v < 0 for v in self.members):
            raise ValueError("negative vertex id")

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        return cls(tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1))

    @property
    def mask(self) -> int:
        return sum(1 << v for v in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members


def _members(g: Graph, W: Iterable[int] | VertexSet) -> tuple[int, ...]:
    ws = tuple(W.members if isinstance(W, VertexSet) else (int(w) for w in W))
    if not ws:
        raise ValueError("vertex set must be non-empty")
    if len(set(ws)) != len(ws):
        raise ValueError(f"repeated vertex in {ws}")
    for w in ws:
        if not 0 <= w < g.n:
            raise ValueError(f"vertex {w} not in graph of order {g.n}")
    return ws


def code_of(g: Graph, W: Iterable[int] | VertexSet, v: int) -> tuple[int, ...]:
    """Distance vector of ``v`` to the members of ``W`` in ``W``'s order."""
    row = g.dist_rows[v]
    return tuple(row[w] for w in _members(g, W))


def codes(g: Graph, W: Iterable[int] | VertexSet) -> list[tuple[int, ...]]:
    ws = _members(g, W)
    return [tuple(row[w] for w in ws) for row in g.dist_rows]


def is_resolving_set(g: Graph, W: Iterable[int] | VertexSet) -> bool:
    return len(set(codes(g, W))) == g.n


def is_wtr_set(g: Graph, W: Iterable[int] | VertexSet) -> bool:
    """Weak total resolving set, checked against the definition.

    For ``W = V(G)`` the total condition is vacuous.
    """
    ws = _members(g, W)
    if not is_resolving_set(g, ws):
        return False
    d = g.dist_rows
    inside = set(ws)
    outside = [u for u in range(g.n) if u not in inside]
    for v in ws:
        others = [w for w in ws if w != v]
        dv = d[v]
        for u in outside:
            du = d[u]
            if not any(du[w] != dv[w] for w in others):
                return False
    return True


def is_wtr_set_via_lemma1(g: Graph, W: Iterable[int] | VertexSet) -> bool:
    """Resolving, and each outside code is at Hamming distance >= 2 from each inside code."""
    ws = _members(g, W)
    cs = codes(g, ws)
    if len(set(cs)) != g.n:
        return False
    inside = set(ws)
    inner = [cs[w] for w in ws]
    for x in range(g.n):
        if x in inside:
            continue
        cx = cs[x]
        for cw in inner:
            if sum(a != b for a, b in zip(cx, cw)) < 2:
                return False
    return True


def unresolved_pairs(g: Graph, W: Iterable[int] | VertexSet) -> list[tuple[int, int]]:
    cs = codes(g, W)
    first: dict[tuple[int, ...], int] = {}
    pairs = []
    for v, c in enumerate(cs):
        if c in first:
            pairs.append((first[c], v))
        else:
            first[c] = v
    return pairs


def wtr_violations(g: Graph, W: Iterable[int] | VertexSet) -> list[tuple[int, int]]:
    """Pairs ``(v, u)`` with ``v`` in ``W`` and ``u`` outside that no member other
    than ``v`` separates, in lexicographic order.

    Raises :class:`NotResolving` when ``W`` is not a resolving set.
    """
    ws = _members(g, W)
    bad = unresolved_pairs(g, ws)
    if bad:
        raise NotResolving(bad)
    d = g.dist_rows
    inside = set(ws)
    out = []
    for v in sorted(ws):
        others = [w for w in ws if w != v]
        for u in range(g.n):
            if u not in inside and all(d[u][w] == d[v][w] for w in others):
                out.append((v, u))
    return out
