from math import comb

import pytest

from arbolist import (
    TooLargeError,
    WeightedKPartiteGraph,
    brute_4cycles,
    brute_kcliques,
    brute_triangles,
    brute_zero_kclique,
    from_edge_list,
)

from .conftest import complete, complete_bipartite, cycle, petersen, wheel


def test_brute_triangles_known():
    assert len(brute_triangles(complete(5))) == comb(5, 3)
    assert brute_triangles(petersen()) == set()
    assert brute_triangles(wheel(5)) == {
        (0, 1, 5), (1, 2, 5), (2, 3, 5), (3, 4, 5), (0, 4, 5)}


def test_brute_4cycles_known():
    assert len(brute_4cycles(complete(4))) == 3
    assert len(brute_4cycles(complete(5))) == 15
    assert brute_4cycles(complete_bipartite(2, 2)) == {(0, 2, 1, 3)}
    assert len(brute_4cycles(complete_bipartite(2, 3))) == 3
    assert brute_4cycles(cycle(5)) == set()


def test_brute_4cycles_records_are_canonical():
    for rec in brute_4cycles(complete(5)):
        a, b, c, d = rec
        assert a == min(rec)
        assert b < d


def test_brute_kcliques_known():
    assert len(brute_kcliques(complete(6), 3)) == 20
    assert len(brute_kcliques(complete(6), 4)) == 15
    assert brute_kcliques(complete_bipartite(3, 3), 3) == set()
    assert brute_kcliques(complete(4), 4) == {(0, 1, 2, 3)}


def test_brute_kcliques_k2_is_edge_set():
    g = wheel(6)
    assert brute_kcliques(g, 2) == g.edge_set()


def _weighted_triangle(weights):
    base = from_edge_list([(0, 1), (0, 2), (1, 2)], 3, {0: 0, 1: 1, 2: 2})
    w = {(0, 1): weights[0], (0, 2): weights[1], (1, 2): weights[2]}
    bound = max(abs(x) for x in weights)
    return WeightedKPartiteGraph(base, 3, w, bound)


def test_brute_zero_kclique_found_and_absent():
    assert brute_zero_kclique(_weighted_triangle((3, -5, 2)), 3) == (0, 1, 2)
    assert brute_zero_kclique(_weighted_triangle((1, 1, 1)), 3) is None


def test_brute_zero_kclique_requires_adjacency():
    # parts are fully labeled but one cross edge is missing: no clique
    base = from_edge_list([(0, 1), (0, 2)], 3, {0: 0, 1: 1, 2: 2})
    wg = WeightedKPartiteGraph(base, 3, {(0, 1): 1, (0, 2): -1}, 1)
    assert brute_zero_kclique(wg, 3) is None


def test_size_guards():
    with pytest.raises(TooLargeError):
        brute_triangles(from_edge_list([], 513))
    with pytest.raises(TooLargeError):
        brute_4cycles(from_edge_list([], 257))
    with pytest.raises(TooLargeError):
        brute_kcliques(from_edge_list([], 3000), 5)


def test_guards_let_boundary_sizes_through():
    assert brute_triangles(from_edge_list([], 512)) == set()
    assert brute_4cycles(from_edge_list([], 256)) == set()


def test_zero_clique_guard_on_part_size():
    n = 3 * 17
    labels = {v: v // 17 for v in range(n)}
    base = from_edge_list([], n, labels)
    wg = WeightedKPartiteGraph(base, 3, {}, 1)
    with pytest.raises(TooLargeError):
        brute_zero_kclique(wg, 3)


def test_oracle_agrees_with_itself_on_overlap():
    """Triangles are 3-cliques; the two oracles must agree."""
    for g in (complete(6), wheel(7), petersen(), cycle(9)):
        assert brute_triangles(g) == brute_kcliques(g, 3)
