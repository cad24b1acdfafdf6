import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from tokenthick.graph import Graph, complete_graph
from tokenthick.graph6 import Graph6Error, parse_graph6, write_graph6


def reference_encode(g: Graph) -> str:
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges)
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def reference_decode(text: str) -> Graph:
    G = nx.from_graph6_bytes(text.encode())
    return Graph(G.number_of_nodes(), G.edges())


def test_star_example():
    g = parse_graph6("D?{")
    assert g.order == 5
    assert g.edges == ((0, 4), (1, 4), (2, 4), (3, 4))
    assert g == reference_decode("D?{")
    assert write_graph6(g) == "D?{"


def test_k1():
    assert write_graph6(Graph(1)) == "@" == reference_encode(Graph(1))
    assert parse_graph6("@") == Graph(1)


def test_empty_input_is_error():
    with pytest.raises(Graph6Error):
        parse_graph6("")


def test_truncated_reports_offset():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("D?")
    assert exc.value.offset == 2


def test_bad_character():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("D?\x01")
    assert exc.value.offset == 2


def test_header_and_newline_accepted():
    assert parse_graph6(">>graph6<<D?{\n") == parse_graph6("D?{")


def test_long_form_matches_reference():
    rng = random.Random(5)
    for n in (63, 64, 100):
        g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.05])
        text = write_graph6(g)
        assert text[0] == "~"
        assert text == reference_encode(g)
        assert parse_graph6(text) == g


def test_complete_graph_matches_reference():
    for n in range(0, 12):
        assert write_graph6(complete_graph(n)) == reference_encode(complete_graph(n))


@st.composite
def graphs(draw, max_order=20):
    n = draw(st.integers(min_value=0, max_value=max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@settings(max_examples=200)
@given(graphs())
def test_round_trip_and_reference(g):
    text = write_graph6(g)
    assert parse_graph6(text) == g
    assert text == reference_encode(g)
    assert reference_decode(text) == g
