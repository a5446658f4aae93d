import random

import pytest

from facehull.graphs import (
    Graph,
    clique_count,
    clique_number,
    clique_vector,
    complete_graph,
    empty_graph,
    is_r_colorable,
    join_with_independent_set,
    multipartite_parts,
)
from facehull.turan import turan_graph
from facehull.verify import enumerate_labeled_graphs
from oracles import colorable_by_scan, is_proper_coloring, subset_scan_clique_vector


def test_construction_validation():
    g = Graph(3, [(1, 2), (2, 3), (2, 1)])  # duplicate edge collapses
    assert g.edge_count() == 2
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 4)])
    with pytest.raises(ValueError):
        Graph(65)
    assert Graph(0).n == 0


def test_clique_vector_examples():
    assert clique_vector(complete_graph(4)) == (4, 6, 4, 1)
    assert clique_vector(empty_graph(5)) == (5, 0, 0, 0, 0)
    assert clique_vector(turan_graph(5, 2)) == (5, 6, 0, 0, 0)


def test_clique_number_examples():
    assert clique_number(complete_graph(4)) == 4
    assert clique_number(turan_graph(6, 3)) == 3
    five_cycle = Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert clique_number(five_cycle) == 2
    assert clique_number(Graph(0)) == 0


def test_clique_count_conventions():
    g = complete_graph(3)
    assert clique_count(g, 0) == 1
    assert clique_count(g, 2) == 3
    assert clique_count(g, 7) == 0
    with pytest.raises(ValueError):
        clique_count(g, -1)


def test_neighborhood_examples():
    path = Graph(3, [(1, 2), (2, 3)])
    assert path.neighborhood(2) == (1, 3)
    assert path.neighborhood(1) == (2,)
    assert complete_graph(4).neighborhood(3) == (1, 2, 4)
    with pytest.raises(ValueError):
        path.neighborhood(9)


def test_induced_subgraph_examples():
    k4 = complete_graph(4)
    sub, labels = k4.induced_subgraph([1, 2])
    assert sub == complete_graph(2) and labels == (1, 2)
    c5 = Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    adj, _ = c5.induced_subgraph([1, 2])
    assert adj.edge_count() == 1
    nonadj, labels = c5.induced_subgraph([1, 3])
    assert nonadj.edge_count() == 0 and labels == (1, 3)


def test_kernel_matches_subset_scan_exhaustively():
    # all 2^15 labeled graphs at n = 6 included; the scan stays naive on purpose
    for n in range(1, 7):
        for g in enumerate_labeled_graphs(n):
            assert clique_vector(g) == subset_scan_clique_vector(g)


def test_c1_and_c2_invariants():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 9)
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.5
        ]
        g = Graph(n, edges)
        c = clique_vector(g)
        assert c[1] == n
        assert c[2] == g.edge_count()
        assert clique_number(g) == c.support() or (g.n == 0 and c.support() == 0)


def test_colorability_examples():
    k3 = complete_graph(3)
    assert is_r_colorable(k3, 2) is None
    assert sorted(is_r_colorable(k3, 3)) == [1, 2, 3]
    c5 = Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert is_r_colorable(c5, 2) is None
    assert is_r_colorable(c5, 3) is not None
    with pytest.raises(ValueError):
        is_r_colorable(k3, 0)


def test_colorability_against_assignment_scan():
    for n in range(1, 5):
        for g in enumerate_labeled_graphs(n):
            for r in range(1, 5):
                coloring = is_r_colorable(g, r)
                if coloring is None:
                    assert not colorable_by_scan(g, r)
                else:
                    assert is_proper_coloring(g, coloring, r)


def test_colorability_random_larger():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(5, 7)
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.6
        ]
        g = Graph(n, edges)
        for r in (2, 3):
            coloring = is_r_colorable(g, r)
            assert (coloring is not None) == colorable_by_scan(g, r)
            if coloring is not None:
                assert is_proper_coloring(g, coloring, r)


def test_join_examples():
    assert clique_vector(join_with_independent_set(complete_graph(2), 2)) == (4, 5, 2)
    assert clique_vector(join_with_independent_set(empty_graph(1), 1)) == (2, 1)
    joined = join_with_independent_set(turan_graph(4, 2), 2)
    assert clique_vector(joined) == (6, 12, 8)
    with pytest.raises(ValueError):
        join_with_independent_set(complete_graph(2), 0)


def test_join_identity_random():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(0, 8)
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.5
        ]
        h = Graph(n, edges)
        m = rng.randint(1, 4)
        joined = join_with_independent_set(h, m)
        cj = clique_vector(joined)
        ch = clique_vector(h)
        for t in range(1, n + m + 1):
            assert cj[t] == m * clique_count(h, t - 1) + ch[t]
        # cross-check the whole vector against the naive oracle
        assert cj == subset_scan_clique_vector(joined)


def test_multipartite_parts():
    assert multipartite_parts(turan_graph(6, 3)) == [[1, 2], [3, 4], [5, 6]]
    assert multipartite_parts(complete_graph(3)) == [[1], [2], [3]]
    assert multipartite_parts(empty_graph(4)) == [[1, 2, 3, 4]]
    c5 = Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert multipartite_parts(c5) is None
    path3 = Graph(3, [(1, 2), (2, 3)])  # this is K_{1,2}
    assert multipartite_parts(path3) == [[1, 3], [2]]


def test_graph_equality_and_hash():
    a = Graph(3, [(1, 2)])
    b = Graph(3, [(2, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph(3, [(1, 3)])
