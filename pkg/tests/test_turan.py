import pytest

from facehull.graphs import clique_vector, multipartite_parts
from facehull.turan import (
    TuranSpec,
    elementary_symmetric,
    turan_clique_vector,
    turan_graph,
    turan_parts,
)
from oracles import subset_scan_clique_vector


def test_parts_examples():
    assert turan_parts(5, 2) == (3, 2)
    assert turan_parts(6, 3) == (2, 2, 2)
    assert turan_parts(7, 3) == (3, 2, 2)
    assert turan_parts(5, 1) == (5,)
    assert turan_parts(3, 7) == (1, 1, 1)  # r > n folds to r = n
    with pytest.raises(ValueError):
        turan_parts(0, 2)
    with pytest.raises(ValueError):
        turan_parts(3, 0)


def test_parts_sum_and_balance():
    for n in range(1, 13):
        for r in range(1, 15):
            parts = turan_parts(n, r)
            assert sum(parts) == n
            assert len(parts) == min(r, n)
            assert max(parts) - min(parts) <= 1
            assert list(parts) == sorted(parts, reverse=True)


def test_graph_examples():
    c4 = turan_graph(4, 2)
    assert sorted(c4.edges()) == [(1, 3), (1, 4), (2, 3), (2, 4)]
    assert turan_graph(3, 3).edge_count() == 3  # K_3
    k32 = turan_graph(5, 2)
    assert k32.edge_count() == 6
    assert multipartite_parts(k32) == [[1, 2, 3], [4, 5]]


def test_graph_labeling_is_reproducible():
    g = turan_graph(7, 3)
    assert multipartite_parts(g) == [[1, 2, 3], [4, 5], [6, 7]]


def test_clique_vector_examples():
    assert turan_clique_vector(5, 2) == (5, 6, 0, 0, 0)
    assert turan_clique_vector(6, 3) == (6, 12, 8, 0, 0, 0)
    assert turan_clique_vector(9, 1) == (9,)


def test_elementary_symmetric():
    assert elementary_symmetric([2, 2, 2]) == [1, 6, 12, 8]
    assert elementary_symmetric([3, 2]) == [1, 5, 6]
    assert elementary_symmetric([], upto=3) == [1]
    assert elementary_symmetric([5, 4, 3], upto=2) == [1, 12, 47]


def test_cross_oracle_small():
    for n in range(1, 9):
        for r in range(1, n + 1):
            built = clique_vector(turan_graph(n, r))
            assert turan_clique_vector(n, r) == built
            assert built == subset_scan_clique_vector(turan_graph(n, r))


def test_edge_law_small():
    for n in range(1, 31):
        assert turan_clique_vector(n, 2)[2] == n * n // 4


def test_zero_pattern():
    for n in range(1, 11):
        for r in range(1, 13):
            t = turan_clique_vector(n, r)
            for k in range(1, n + 1):
                assert (t[k] == 0) == (k > min(r, n))


def test_monotonicity():
    for n in range(1, 13):
        for r in range(1, 13):
            t = turan_clique_vector(n, r)
            up_n = turan_clique_vector(n + 1, r)
            up_r = turan_clique_vector(n, r + 1)
            for k in range(1, n + 1):
                assert t[k] <= up_n[k]
                assert t[k] <= up_r[k]


def test_turan_spec_normalizes():
    spec = TuranSpec.of(3, 9)
    assert spec.r == 3 and spec.parts == (1, 1, 1)
    with pytest.raises(ValueError):
        TuranSpec.of(3, -1)
