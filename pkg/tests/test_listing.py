from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings

from arbolist import (
    Collector,
    KTooSmallError,
    all_edge_sparse_triangle,
    brute_4cycles,
    brute_kcliques,
    brute_triangles,
    count_4cycles,
    count_kcliques,
    count_triangles,
    degeneracy_ordering,
    four_cycle_record,
    from_edge_list,
    list_4cycles,
    list_kcliques,
    list_triangles,
    triangle_record,
)

from .conftest import (
    complete,
    complete_bipartite,
    cycle,
    petersen,
    small_graphs,
    star,
    wheel,
)


def collect(lister, *args):
    sink = Collector()
    stats = lister(*args, sink)
    return set(sink.records), stats


def test_triangle_record_canonical():
    assert triangle_record(2, 0, 1) == (0, 1, 2)


def test_four_cycle_record_canonical():
    # rotations and reflections of the same cycle collapse to one record
    variants = [(0, 1, 2, 3), (1, 2, 3, 0), (3, 2, 1, 0), (0, 3, 2, 1)]
    records = {four_cycle_record(*v) for v in variants}
    assert records == {(0, 1, 2, 3)}
    assert four_cycle_record(2, 1, 0, 3) == (0, 1, 2, 3)
    assert four_cycle_record(0, 3, 1, 2)[0] == 0


def test_triangles_on_known_graphs():
    assert count_triangles(complete(4)) == 4
    assert count_triangles(wheel(5)) == 5
    assert count_triangles(petersen()) == 0
    chord = from_edge_list([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)], 4)
    assert count_triangles(chord) == 2


def test_triangles_counting_identity_complete():
    for n in range(1, 13):
        assert count_triangles(complete(n)) == comb(n, 3)


def test_4cycles_on_known_graphs():
    assert count_4cycles(complete(4)) == 3
    assert count_4cycles(complete(5)) == 15
    assert count_4cycles(complete_bipartite(2, 2)) == 1
    assert count_4cycles(complete_bipartite(2, 3)) == 3
    assert count_4cycles(petersen()) == 0
    assert count_4cycles(cycle(4)) == 1
    assert count_4cycles(cycle(5)) == 0


def test_4cycles_counting_identity_bipartite():
    for a in range(1, 9):
        for b in range(1, 9):
            expected = comb(a, 2) * comb(b, 2)
            assert count_4cycles(complete_bipartite(a, b)) == expected


def test_kcliques_counting_identity_complete():
    for n in range(1, 13):
        for k in range(2, 7):
            assert count_kcliques(complete(n), k) == comb(n, k)


def test_kcliques_known_values():
    assert count_kcliques(complete(6), 3) == 20
    assert count_kcliques(complete(6), 4) == 15
    assert count_kcliques(complete_bipartite(3, 3), 3) == 0


def test_kcliques_k2_is_edges():
    g = wheel(6)
    records, _ = collect(list_kcliques, g, 2)
    assert records == set(g.edges())


def test_kcliques_rejects_small_k():
    with pytest.raises(KTooSmallError):
        list_kcliques(complete(3), 1, lambda r: None)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_triangles_match_oracle(g):
    records, stats = collect(list_triangles, g)
    assert records == brute_triangles(g)
    assert stats.emitted_count == len(records)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_4cycles_match_oracle(g):
    records, stats = collect(list_4cycles, g)
    assert records == brute_4cycles(g)
    assert stats.emitted_count == len(records)


@settings(max_examples=30, deadline=None)
@given(small_graphs())
def test_kcliques_match_oracle(g):
    for k in (3, 4, 5):
        records, stats = collect(list_kcliques, g, k)
        assert records == brute_kcliques(g, k)
        assert stats.emitted_count == len(records)


@settings(max_examples=30, deadline=None)
@given(small_graphs())
def test_kcliques_3_equals_triangles(g):
    tri, _ = collect(list_triangles, g)
    cli, _ = collect(list_kcliques, g, 3)
    assert cli == tri


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_each_record_emitted_exactly_once(g):
    seen = []
    list_triangles(g, seen.append)
    assert len(seen) == len(set(seen))
    seen = []
    list_4cycles(g, seen.append)
    assert len(seen) == len(set(seen))
    seen = []
    list_kcliques(g, 4, seen.append)
    assert len(seen) == len(set(seen))


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_triangle_steps_within_degeneracy_budget(g):
    """Inner-loop work stays within 2 * m * degeneracy."""
    _, stats = collect(list_triangles, g)
    d = degeneracy_ordering(g).degeneracy
    assert stats.steps <= 2 * g.m * max(d, 1) + g.n


def test_triangle_steps_budget_on_structured_graphs():
    for g in (complete(12), star(200), wheel(20), petersen()):
        _, stats = collect(list_triangles, g)
        d = degeneracy_ordering(g).degeneracy
        assert stats.steps <= 2 * g.m * max(d, 1) + g.n


def test_star_4cycle_work_stays_linear():
    """A high-degree hub must not force quadratic pair scans."""
    g = star(3000)
    _, stats = collect(list_4cycles, g)
    assert stats.emitted_count == 0
    assert stats.steps <= 10 * g.m + g.n


def test_early_stop_triangle():
    g = complete(10)
    seen = []

    def sink(record):
        seen.append(record)
        return len(seen) == 5

    stats = list_triangles(g, sink)
    assert len(seen) == 5
    assert stats.emitted_count == 5


def test_early_stop_4cycles():
    g = complete(8)
    seen = []
    list_4cycles(g, lambda r: seen.append(r) or len(seen) == 3)
    assert len(seen) == 3


def test_early_stop_kcliques():
    g = complete(9)
    seen = []
    list_kcliques(g, 4, lambda r: seen.append(r) or True)
    assert len(seen) == 1


def test_stats_fields_populated():
    _, stats = collect(list_triangles, complete(8))
    assert stats.preprocess_time >= 0
    assert stats.emit_time >= 0
    assert stats.max_gap >= 0
    assert stats.steps > 0
    assert stats.emitted_count == comb(8, 3)


def test_all_edge_sparse_triangle():
    chord = from_edge_list([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)], 4)
    answers = all_edge_sparse_triangle(chord)
    assert answers[(0, 1)] and answers[(0, 2)] and answers[(2, 3)]
    assert set(answers) == set(chord.edges())

    p = petersen()
    assert not any(all_edge_sparse_triangle(p).values())


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_all_edge_sparse_triangle_matches_membership(g):
    tris = brute_triangles(g)
    in_tri = set()
    for a, b, c in tris:
        in_tri |= {(a, b), (a, c), (b, c)}
    answers = all_edge_sparse_triangle(g)
    for e, flag in answers.items():
        assert flag == (e in in_tri)


@settings(max_examples=30, deadline=None)
@given(small_graphs())
def test_record_vertices_form_claimed_subgraph(g):
    records, _ = collect(list_4cycles, g)
    for a, b, c, d in records:
        assert a == min(a, b, c, d) and b < d
        for u, v in ((a, b), (b, c), (c, d), (d, a)):
            assert g.has_edge(u, v)
    cliques, _ = collect(list_kcliques, g, 4)
    for rec in cliques:
        assert list(rec) == sorted(rec)
        for u, v in combinations(rec, 2):
            assert g.has_edge(u, v)
