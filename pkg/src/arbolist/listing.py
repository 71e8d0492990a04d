"""Output-sensitive listing of triangles, 4-cycles and k-cliques.

All listers stream canonical records into a caller-supplied sink and run
in time proportional to m times a small power of the graph degeneracy,
plus the number of records emitted.  A sink is any callable taking one
record; returning a truthy value stops the enumeration before the next
record.  Every record is emitted exactly once, in a deterministic order
for a given graph.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from time import perf_counter
from typing import Any, Callable, NamedTuple, Optional

from .core import Graph, OrderingResult, degeneracy_ordering
from .errors import KTooSmallError


class TriangleRecord(NamedTuple):
    """Triangle as an ascending vertex triple a < b < c."""

    a: int
    b: int
    c: int


class FourCycleRecord(NamedTuple):
    """4-cycle a-b-c-d-a in cyclic order, with a minimal and b < d."""

    a: int
    b: int
    c: int
    d: int


# A k-clique is an ascending tuple of k vertex ids.
CliqueRecord = tuple

Sink = Callable[[Any], Any]


def triangle_record(x: int, y: int, z: int) -> TriangleRecord:
    a, b, c = sorted((x, y, z))
    return TriangleRecord(a, b, c)


def four_cycle_record(w0: int, w1: int, w2: int, w3: int) -> FourCycleRecord:
    """Canonicalize the cycle w0-w1-w2-w3-w0.

    Rotates so the smallest vertex comes first, then picks the traversal
    direction that puts the smaller of its two cycle neighbors second.
    """
    vs = (w0, w1, w2, w3)
    i = vs.index(min(vs))
    a = vs[i]
    nxt = vs[(i + 1) % 4]
    prv = vs[(i - 1) % 4]
    c = vs[(i + 2) % 4]
    b, d = (nxt, prv) if nxt < prv else (prv, nxt)
    return FourCycleRecord(a, b, c, d)


def clique_record(vertices) -> CliqueRecord:
    return tuple(sorted(vertices))


@dataclass
class EnumerationStats:
    """Instrumentation attached to one enumeration run.

    ``steps`` counts inner-loop iterations (adjacency entries scanned plus
    records assembled); it is the machine-independent work signal the
    benchmarks normalize against.  ``max_gap`` is the largest wall-clock
    gap between consecutive emissions, measured from the end of
    preprocessing; delay guarantees are asserted in amortized form
    (emit_time / emitted_count), not per record.
    """

    preprocess_time: float = 0.0
    emit_time: float = 0.0
    emitted_count: int = 0
    max_gap: float = 0.0
    steps: int = 0


class Collector:
    """Sink that appends every record to a list, never stopping."""

    def __init__(self):
        self.records: list = []

    def __call__(self, record) -> None:
        self.records.append(record)


def _rank_sorted_adjacency(g: Graph, position) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]], list[int]]:
    """Adjacency re-sorted by elimination rank.

    Returns three parallel structures: for each vertex, its neighbors
    sorted by position; the matching position values (for bisecting); and
    the index where the strictly-later suffix starts.
    """
    by_rank: list[tuple[int, ...]] = []
    rank_of: list[tuple[int, ...]] = []
    split: list[int] = []
    for v in range(g.n):
        nbrs = sorted(g.neighbors(v), key=position.__getitem__)
        ranks = tuple(position[w] for w in nbrs)
        by_rank.append(tuple(nbrs))
        rank_of.append(ranks)
        split.append(bisect_right(ranks, position[v]))
    return by_rank, rank_of, split


def list_triangles(g: Graph, sink: Sink) -> EnumerationStats:
    """List every triangle exactly once in O(m * degeneracy) time.

    Vertices are processed in degeneracy order with logical deletion: a
    neighbor counts as still present iff it comes later in the order.
    For the current vertex v, its remaining neighbors are marked; for each
    marked neighbor u, the neighbors of u that remain after u are scanned,
    and {v, u, w} is reported whenever w is marked.  Scanning only the
    later-than-u suffix emits each triangle once, at its earliest vertex.
    """
    t0 = perf_counter()
    ordering = degeneracy_ordering(g)
    position = ordering.position
    by_rank, _, split = _rank_sorted_adjacency(g, position)
    later = [by_rank[v][split[v]:] for v in range(g.n)]
    marked = bytearray(g.n)
    stats = EnumerationStats()
    t1 = perf_counter()
    stats.preprocess_time = t1 - t0
    last = t1
    steps = 0
    emitted = 0
    max_gap = 0.0
    stopped = False
    for v in ordering.order:
        lv = later[v]
        for u in lv:
            marked[u] = 1
        for u in lv:
            for w in later[u]:
                steps += 1
                if marked[w]:
                    now = perf_counter()
                    gap = now - last
                    if gap > max_gap:
                        max_gap = gap
                    last = now
                    emitted += 1
                    if sink(triangle_record(v, u, w)):
                        stopped = True
                        break
            if stopped:
                break
        for u in lv:
            marked[u] = 0
        if stopped:
            break
    stats.emit_time = perf_counter() - t1
    stats.emitted_count = emitted
    stats.max_gap = max_gap
    stats.steps = steps
    return stats


def count_triangles(g: Graph) -> int:
    return list_triangles(g, lambda record: None).emitted_count


def all_edge_sparse_triangle(g: Graph) -> dict[tuple[int, int], bool]:
    """For every edge, decide whether it lies in at least one triangle.

    Runs one triangle enumeration and flags the three edges of each
    emitted triangle, so the cost is the same O(m * degeneracy).
    """
    answer: dict[tuple[int, int], bool] = {e: False for e in g.edges()}

    def flag(t: TriangleRecord) -> None:
        answer[(t.a, t.b)] = True
        answer[(t.a, t.c)] = True
        answer[(t.b, t.c)] = True

    list_triangles(g, flag)
    return answer


def _degree_descending_order(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    return tuple(order), position


def list_4cycles(g: Graph, sink: Sink) -> EnumerationStats:
    """List every 4-cycle exactly once; two-hop scans cost O(m * degeneracy).

    Vertices are processed in order of decreasing degree (ties by id) with
    logical deletion.  For the current vertex v, a pass over the two-hop
    neighborhood accumulates, for every target w, the list U[w] of
    still-present intermediate neighbors u; every unordered pair
    {u1, u2} within U[w] is one 4-cycle v-u1-w-u2.  U is cleared and v is
    logically deleted before the next vertex.

    Each cycle is found once, at whichever of its four vertices comes
    first in the order.  The degree-descending order is what bounds the
    two-hop work: every scanned path v-u-w charges the edge (u, w) through
    an endpoint of no larger degree, and the sum of min-endpoint degrees
    over edges is at most twice m times the arboricity.  Emission is O(1)
    amortized per cycle.
    """
    t0 = perf_counter()
    order, position = _degree_descending_order(g)
    by_rank, rank_of, split = _rank_sorted_adjacency(g, position)
    stats = EnumerationStats()
    u_lists: dict[int, list[int]] = {}
    t1 = perf_counter()
    setup = t1 - t0
    scan_total = 0.0
    emit_total = 0.0
    last = t1
    steps = 0
    emitted = 0
    max_gap = 0.0
    stopped = False
    for v in order:
        pv = position[v]
        s0 = perf_counter()
        u_lists.clear()
        for u in by_rank[v][split[v]:]:
            i = bisect_right(rank_of[u], pv)
            for w in by_rank[u][i:]:
                steps += 1
                if w in u_lists:
                    u_lists[w].append(u)
                else:
                    u_lists[w] = [u]
        s1 = perf_counter()
        scan_total += s1 - s0
        for w, us in u_lists.items():
            if len(us) < 2:
                continue
            for i in range(len(us) - 1):
                for j in range(i + 1, len(us)):
                    steps += 1
                    now = perf_counter()
                    gap = now - last
                    if gap > max_gap:
                        max_gap = gap
                    last = now
                    emitted += 1
                    if sink(four_cycle_record(v, us[i], w, us[j])):
                        stopped = True
                        break
                if stopped:
                    break
            if stopped:
                break
        emit_total += perf_counter() - s1
        if stopped:
            break
    stats.preprocess_time = setup + scan_total
    stats.emit_time = emit_total
    stats.emitted_count = emitted
    stats.max_gap = max_gap
    stats.steps = steps
    return stats


def count_4cycles(g: Graph) -> int:
    return list_4cycles(g, lambda record: None).emitted_count


def list_kcliques(g: Graph, k: int, sink: Sink) -> EnumerationStats:
    """List every k-clique exactly once, k >= 2.

    The base case k=2 emits all edges.  For k >= 3 the vertices are
    processed in degeneracy order; for each vertex v the search recurses
    for (k-1)-cliques inside the subgraph induced by v's not-yet-deleted
    neighbors, then prefixes v to every result.  Each recursion level
    works on at most degeneracy-many vertices, which is what caps the
    total work at O(m * degeneracy^(k-2)) plus the output size.
    """
    if k < 2:
        raise KTooSmallError(k)
    t0 = perf_counter()
    stats = EnumerationStats()
    state = {"steps": 0, "emitted": 0, "stopped": False,
             "max_gap": 0.0, "last": t0}

    def emit(vertices: tuple[int, ...]) -> None:
        now = perf_counter()
        gap = now - state["last"]
        if gap > state["max_gap"]:
            state["max_gap"] = gap
        state["last"] = now
        state["emitted"] += 1
        if sink(clique_record(vertices)):
            state["stopped"] = True

    def walk(graph: Graph, kk: int, ids: list[int], prefix: tuple[int, ...]) -> None:
        if kk == 2:
            for u in range(graph.n):
                for w in graph.neighbors(u):
                    if w <= u:
                        continue
                    state["steps"] += 1
                    emit(prefix + (ids[u], ids[w]))
                    if state["stopped"]:
                        return
            return
        ordering = degeneracy_ordering(graph)
        position = ordering.position
        by_rank, _, split = _rank_sorted_adjacency(graph, position)
        later = [by_rank[v][split[v]:] for v in range(graph.n)]
        in_sub = [-1] * graph.n
        for v in ordering.order:
            sub_vertices = sorted(later[v])
            if len(sub_vertices) < kk - 1:
                continue
            for i, s in enumerate(sub_vertices):
                in_sub[s] = i
            sub_adj: list[list[int]] = [[] for _ in sub_vertices]
            for s in sub_vertices:
                si = in_sub[s]
                for w in later[s]:
                    state["steps"] += 1
                    wi = in_sub[w]
                    if wi >= 0:
                        sub_adj[si].append(wi)
                        sub_adj[wi].append(si)
            for nbrs in sub_adj:
                nbrs.sort()
            sub_ids = [ids[s] for s in sub_vertices]
            for s in sub_vertices:
                in_sub[s] = -1
            walk(Graph(len(sub_vertices), sub_adj), kk - 1, sub_ids,
                 prefix + (ids[v],))
            if state["stopped"]:
                return

    t1 = perf_counter()
    stats.preprocess_time = t1 - t0
    state["last"] = t1
    walk(g, k, list(range(g.n)), ())
    stats.emit_time = perf_counter() - t1
    stats.emitted_count = state["emitted"]
    stats.max_gap = state["max_gap"]
    stats.steps = state["steps"]
    return stats


def count_kcliques(g: Graph, k: int) -> int:
    return list_kcliques(g, k, lambda record: None).emitted_count
