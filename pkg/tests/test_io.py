import networkx as nx
import pytest
from hypothesis import given

import oracles
from conftest import connected_graphs
from weaktotal import constructions as C
from weaktotal.io import (
    ParseError,
    load_graphs,
    parse_edgelist,
    parse_graph6,
    read_edgelist,
    read_graph6,
    to_edgelist,
    to_graph6,
)


def test_known_graph6_strings():
    # reference strings as printed by nauty's geng/showg conventions
    assert to_graph6(C.path(4)) == "Ch"
    assert to_graph6(C.complete(4)) == "C~"
    assert to_graph6(C.star(4)) == "Ds_"


@given(connected_graphs(max_n=12))
def test_graph6_matches_networkx(g):
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(oracles.nx_graph(g), header=False).decode().strip()
    assert ours == theirs
    assert parse_graph6(ours) == g


def test_graph6_long_size_prefix():
    g = C.path(70)
    s = to_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g
    assert s == nx.to_graph6_bytes(oracles.nx_graph(g), header=False).decode().strip()


def test_graph6_header_is_optional():
    assert parse_graph6(">>graph6<<Ch") == C.path(4)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty"),
        ("C h", "invalid graph6 character"),
        ("Chh", "expected 1"),
        ("~?", "truncated"),
        ("C?", "disconnected"),
    ],
)
def test_graph6_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_graph6(text)


def test_graph6_reader_reports_line_numbers():
    with pytest.raises(ParseError) as exc:
        list(read_graph6(["Ch", "", "C!"]))
    assert exc.value.line == 3
    assert str(exc.value).startswith("line 3:")


def test_edgelist_roundtrip_and_comments():
    g = C.spider([1, 2, 3])
    text = "# a spider\n\n" + to_edgelist(g)
    assert parse_edgelist(text) == g
    both = list(read_edgelist((to_edgelist(C.path(3)) + to_edgelist(C.cycle(5))).splitlines()))
    assert both == [C.path(3), C.cycle(5)]


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 2\n0 1\n", 1),  # too few edges
        ("3 2\n0 1\n1 x\n", 3),
        ("3\n", 1),
        ("3 2\n0 1\n1 1\n", 1),  # self-loop reported at the block header
        ("4 2\n0 1\n2 3\n", 1),
        ("2 1\n0 1 5\n", 2),
    ],
)
def test_edgelist_errors_carry_lines(text, line):
    with pytest.raises(ParseError) as exc:
        list(read_edgelist(text.splitlines()))
    assert exc.value.line == line


def test_parse_edgelist_needs_one_graph():
    with pytest.raises(ParseError, match="exactly one"):
        parse_edgelist("")


def test_load_graphs_guesses_format(tmp_path):
    g6 = tmp_path / "c.g6"
    g6.write_text(to_graph6(C.cycle(5)) + "\n")
    el = tmp_path / "c.txt"
    el.write_text(to_edgelist(C.cycle(5)))
    assert load_graphs(g6) == load_graphs(el) == [C.cycle(5)]
