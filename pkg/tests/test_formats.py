import json
import random

import pytest

from facehull.complexes import SimplicialComplex
from facehull.formats import (
    ParseError,
    complex_from_facet_text,
    complex_from_json_dict,
    complex_to_facet_text,
    complex_to_json_dict,
    decode_graph6,
    encode_graph6,
    graph_from_edge_text,
    graph_to_edge_text,
    graph_to_json_dict,
    load_complex_text,
    load_graph_text,
)
from facehull.graphs import Graph, complete_graph, empty_graph
from facehull.verify import enumerate_labeled_graphs, family_to_complex, _family_masks


def random_graph(rng, n):
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < 0.5
    ]
    return Graph(n, edges)


def test_graph6_known_values():
    assert encode_graph6(complete_graph(3)) == "Bw"
    assert encode_graph6(empty_graph(1)) == "@"
    assert encode_graph6(Graph(3, [(1, 2), (2, 3)])) == "Bg"


def test_graph6_roundtrip_exhaustive_small():
    for n in (1, 2, 3, 4):
        for g in enumerate_labeled_graphs(n):
            assert decode_graph6(encode_graph6(g)) == g


def test_graph6_matches_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(99)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 12))
        ours = encode_graph6(g)
        ng = nx.Graph()
        ng.add_nodes_from(range(g.n))
        ng.add_edges_from((u - 1, v - 1) for u, v in g.edges())
        theirs = nx.to_graph6_bytes(ng, header=False).decode().strip()
        assert ours == theirs
        back = nx.from_graph6_bytes(ours.encode())
        assert set(back.edges()) == {(u - 1, v - 1) for u, v in g.edges()}


def test_graph6_header_and_errors():
    g = complete_graph(3)
    assert decode_graph6(">>graph6<<Bw") == g
    with pytest.raises(ParseError):
        decode_graph6("")
    with pytest.raises(ParseError):
        decode_graph6("B")  # missing body
    with pytest.raises(ParseError):
        decode_graph6("Bww")  # extra body
    with pytest.raises(ParseError):
        decode_graph6("B\x1f")  # character below the graph6 range
    with pytest.raises(ParseError):
        decode_graph6("Bx")  # nonzero padding bits for n=3


def test_edge_text_roundtrip_and_errors():
    rng = random.Random(4)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 9))
        assert graph_from_edge_text(graph_to_edge_text(g)) == g
    with pytest.raises(ParseError) as exc:
        graph_from_edge_text("1 2\n")
    assert "line 1" in str(exc.value)
    with pytest.raises(ParseError) as exc:
        graph_from_edge_text("n=3\n1 2 3\n")
    assert "line 2" in str(exc.value)
    with pytest.raises(ParseError):
        graph_from_edge_text("n=3\n1 x\n")
    with pytest.raises(ParseError):
        graph_from_edge_text("")
    with pytest.raises(ParseError):
        graph_from_edge_text("n=2\n1 3\n")  # out of range


def test_graph_json_roundtrip():
    g = Graph(4, [(1, 2), (3, 4)])
    d = graph_to_json_dict(g)
    assert d == {"n": 4, "edges": [[1, 2], [3, 4]]}
    assert load_graph_text(json.dumps(d)) == g


def test_load_graph_autodetect():
    g = complete_graph(3)
    assert load_graph_text("Bw") == g
    assert load_graph_text(graph_to_edge_text(g)) == g
    assert load_graph_text(json.dumps(graph_to_json_dict(g))) == g
    with pytest.raises(ValueError):
        load_graph_text("Bw", fmt="nope")


def test_complex_text_roundtrip():
    cx = SimplicialComplex.from_facets(5, [[1, 2, 3], [3, 4], [5]])
    text = complex_to_facet_text(cx)
    assert text.splitlines()[0] == "n=5"
    assert complex_from_facet_text(text) == cx
    # the {empty-face}-only complex serializes as a bare header
    trivial = SimplicialComplex.from_facets(2, [])
    assert complex_to_facet_text(trivial) == "n=2\n"
    assert complex_from_facet_text("n=2\n") == trivial


def test_complex_text_errors():
    with pytest.raises(ParseError):
        complex_from_facet_text("1 2\n")
    with pytest.raises(ParseError):
        complex_from_facet_text("n=3\n1 9\n")
    with pytest.raises(ParseError):
        complex_from_facet_text("")
    void = family_to_complex(2, 0)
    with pytest.raises(ValueError):
        complex_to_facet_text(void)


def test_complex_json_roundtrip_exhaustive_small():
    for n in (1, 2, 3):
        for fam in _family_masks(n):
            cx = family_to_complex(n, fam)
            d = complex_to_json_dict(cx)
            if cx.is_void:
                assert d.get("void") is True
                continue
            assert complex_from_json_dict(d) == cx


def test_load_complex_autodetect():
    cx = SimplicialComplex.from_facets(3, [[1, 2]])
    assert load_complex_text(complex_to_facet_text(cx)) == cx
    assert load_complex_text(json.dumps(complex_to_json_dict(cx))) == cx
