from __future__ import annotations

import io

import pytest
from hypothesis import given, settings

from ekrkit.graph6 import from_graph6, read_graph6, to_graph6
from ekrkit.graphs import GraphError, build_graph, complete_graph, empty_graph, named_graph

from strategies import graphs


def test_known_encodings():
    assert from_graph6("D??") == empty_graph(5)
    assert from_graph6("A_") == complete_graph(2)
    assert to_graph6(complete_graph(4)) == "C~"
    assert from_graph6(">>graph6<<A_") == complete_graph(2)


def test_dodecahedron_round_trip():
    g = named_graph("dodecahedron")
    assert from_graph6(to_graph6(g)).adj == g.adj


def test_large_order_header():
    g = build_graph(70, [(0, 69), (5, 6)], max_order=128)
    text = to_graph6(g)
    assert text.startswith("~")
    assert from_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "D?", "D???", "A`", "A ", "é"])
def test_malformed(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_order_limit():
    g = build_graph(40, [])
    with pytest.raises(GraphError):
        from_graph6(to_graph6(g), max_order=30)


def test_reader_skips_blank_and_header():
    lines = list(read_graph6(io.StringIO(">>graph6<<\nA_\n\nD??\n")))
    assert lines == [(2, "A_"), (4, "D??")]


@given(graphs(min_n=0, max_n=12))
@settings(max_examples=100, deadline=None)
def test_round_trip(g):
    assert from_graph6(to_graph6(g)) == g
