import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from weaktotal.constructions import prufer_to_edges  # noqa: E402
from weaktotal.graph import build_graph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    edges = {tuple(sorted(e)) for e in prufer_to_edges(seq, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(sorted(edges | set(extra)), n)


@st.composite
def trees(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return build_graph(prufer_to_edges(seq, n), n)


@st.composite
def graph_and_subset(draw, max_n=8):
    g = draw(connected_graphs(max_n=max_n))
    W = draw(st.lists(st.integers(0, g.n - 1), unique=True, min_size=1))
    return g, tuple(sorted(W))


@pytest.fixture
def p4():
    return build_graph([(0, 1), (1, 2), (2, 3)], 4)
