"""graph6 and edge-list readers/writers.

graph6 follows McKay's format: a size prefix, then the upper triangle of
the adjacency matrix in column order (``x(0,1), x(0,2), x(1,2), x(0,3)...``)
packed six bits per printable character (value + 63).

The edge-list format is a sequence of blocks, each a header line ``n m``
followed by ``m`` lines ``u v`` with 0-based endpoints.  Blank lines and
``#`` comments are ignored.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph, GraphError, build_graph

HEADER = ">>graph6<<"


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("order too large for graph6")


def to_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        row = g.neighbor_masks[j]
        bits.extend((row >> i) & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _encode_n(n) + "".join(chars)


def parse_graph6(text: str, line: int | None = None) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise ParseError("empty graph6 string", line)
    bad = [c for c in s if not 63 <= ord(c) <= 126]
    if bad:
        raise ParseError(f"invalid graph6 character {bad[0]!r}", line)
    vals = [ord(c) - 63 for c in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field", line)
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field", line)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != expected:
        raise ParseError(
            f"graph6 body has {len(body)} characters, expected {expected} for n={n}", line
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    try:
        return build_graph(edges, n)
    except GraphError as exc:
        raise ParseError(str(exc), line) from exc


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for i, raw in enumerate(lines, start=1):
        if raw.strip():
            yield parse_graph6(raw, line=i)


def to_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_edgelist(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one or more ``n m`` blocks; errors carry 1-based line numbers."""
    rows: list[tuple[int, list[str]]] = []
    for i, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            rows.append((i, body))
    k = 0
    while k < len(rows):
        lineno, head = rows[k]
        if len(head) != 2:
            raise ParseError(f"expected header 'n m', got {' '.join(head)!r}", lineno)
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError:
            raise ParseError(f"non-integer header {' '.join(head)!r}", lineno) from None
        if m < 0:
            raise ParseError("negative edge count", lineno)
        block = rows[k + 1 : k + 1 + m]
        if len(block) < m:
            raise ParseError(f"header announces {m} edges but only {len(block)} follow", lineno)
        edges = []
        for eline, parts in block:
            if len(parts) != 2:
                raise ParseError(f"expected 'u v', got {' '.join(parts)!r}", eline)
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ParseError(f"non-integer edge {' '.join(parts)!r}", eline) from None
        try:
            yield build_graph(edges, n)
        except GraphError as exc:
            raise ParseError(str(exc), lineno) from exc
        k += 1 + m


def parse_edgelist(text: str) -> Graph:
    graphs = list(read_edgelist(text.splitlines()))
    if len(graphs) != 1:
        raise ParseError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def load_graphs(path: str | Path, fmt: str | None = None) -> list[Graph]:
    """Read every graph in a file; ``fmt`` is ``graph6`` or ``edgelist``
    (guessed from the suffix when omitted: ``.g6`` means graph6)."""
    path = Path(path)
    if fmt is None:
        fmt = "graph6" if path.suffix in (".g6", ".graph6") else "edgelist"
    lines = path.read_text().splitlines()
    if fmt == "graph6":
        return list(read_graph6(lines))
    if fmt == "edgelist":
        return list(read_edgelist(lines))
    raise ValueError(f"unknown graph format {fmt!r}")
