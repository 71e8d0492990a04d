"""Graph families and reductions used as corpus inputs and hard cases.

Everything here is deterministic given its parameters and seed, so the
same call always produces the same graph.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from itertools import combinations
from math import ceil, comb
from typing import Optional

import numpy as np

from .core import Graph, from_edge_list, validate_kpartite
from .errors import (
    BadSigmaError,
    MissingLabelsError,
    NotPrimeError,
    NotTripartiteError,
    TooManyEdgesError,
)
from .listing import (
    FourCycleRecord,
    count_4cycles,
    count_triangles,
    four_cycle_record,
    triangle_record,
)
from .primes import is_prime
from .zeroclique import WeightedKPartiteGraph


@dataclass(frozen=True)
class PolaritySpec:
    """Expected shape of the orthogonality graph for a prime q."""

    q: int
    n: int
    expected_max_degree: int


def polarity_spec(q: int) -> PolaritySpec:
    if not is_prime(q):
        raise NotPrimeError(q)
    return PolaritySpec(q=q, n=q * q + q + 1, expected_max_degree=q + 1)


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    # Canonical representatives: first nonzero coordinate equals 1.
    pts = [(1, a, b) for a in range(q) for b in range(q)]
    pts += [(0, 1, b) for b in range(q)]
    pts.append((0, 0, 1))
    return pts


def polarity_graph(q: int) -> Graph:
    """Orthogonality graph of the projective plane over GF(q), q prime.

    Vertices are the q^2+q+1 projective points; two distinct points are
    adjacent iff their dot product vanishes mod q.  Any two points have
    at most one common neighbor (two distinct lines meet in one point),
    so the graph contains no 4-cycle, while its edge count q(q+1)^2/2 is
    about n^(3/2).  Self-orthogonal points keep degree q, the rest q+1.
    """
    if not is_prime(q):
        raise NotPrimeError(q)
    pts = np.array(_projective_points(q), dtype=np.int64)
    n = len(pts)
    edges: list[tuple[int, int]] = []
    chunk = 1024
    for start in range(0, n, chunk):
        block = pts[start:start + chunk]
        zero = (block @ pts.T) % q == 0
        rows, cols = np.nonzero(zero)
        for r, c in zip(rows.tolist(), cols.tolist()):
            u = start + r
            if u < c:
                edges.append((u, c))
    return from_edge_list(edges, n)


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform random graph with exactly m distinct edges."""
    total = comb(n, 2)
    if m > total:
        raise TooManyEdgesError(m, total)
    rng = random.Random(seed)
    picked = sorted(rng.sample(range(total), m))
    row_start = [0] * n
    for u in range(1, n):
        row_start[u] = row_start[u - 1] + (n - u)
    edges = []
    for idx in picked:
        u = bisect_right(row_start, idx) - 1
        v = u + 1 + (idx - row_start[u])
        edges.append((u, v))
    return from_edge_list(edges, n)


def apply_part_labels(g: Graph, labels: list[int]) -> Graph:
    """Attach the given labels and drop every intra-part edge."""
    if len(labels) != g.n:
        raise ValueError(f"got {len(labels)} labels for {g.n} vertices")
    for v, lab in enumerate(labels):
        if lab < 0:
            raise ValueError(f"negative label {lab} at vertex {v}")
    kept = [(u, v) for u, v in g.edges() if labels[u] != labels[v]]
    return from_edge_list(kept, g.n, {v: labels[v] for v in range(g.n)})


def color_code(g: Graph, k: int, seed: int) -> Graph:
    """Random k-coloring of the vertices, keeping only inter-color edges.

    A fixed subgraph on k vertices survives with constant probability
    (k!/k^k when its vertices must take distinct colors), which is the
    usual amplification trick for turning colorful search into general
    search.  Each edge survives with probability (k-1)/k.
    """
    if k < 2:
        raise ValueError(f"k={k} must be at least 2")
    rng = random.Random(seed)
    labels = [rng.randrange(k) for _ in range(g.n)]
    return apply_part_labels(g, labels)


def random_kpartite(k: int, n_part: int, edge_prob: float, seed: int) -> Graph:
    """Random k-partite graph, parts of equal size in contiguous id blocks."""
    rng = random.Random(seed)
    n = k * n_part
    labels = {v: v // n_part for v in range(n)}
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            for u in range(i * n_part, (i + 1) * n_part):
                for v in range(j * n_part, (j + 1) * n_part):
                    if rng.random() < edge_prob:
                        edges.append((u, v))
    return from_edge_list(edges, n, labels)


@dataclass(frozen=True)
class ReductionInstance:
    """Output of the triangle-to-4-cycle rewrite, with provenance hooks.

    ``graph`` is 4-partite on parts A, B, C and the fresh copy part C'.
    ``matching`` holds the C-to-C' identity matching edges; a 4-cycle of
    the output uses exactly one matching edge iff it encodes a triangle
    of the source graph.  ``copy_to_source`` maps each C' vertex back to
    the C vertex it copies.
    """

    graph: Graph
    matching: frozenset
    copy_to_source: dict[int, int]
    source_triangle_count: int
    source_4cycle_count: int

    def origin_of(self, cycle: FourCycleRecord) -> str:
        """Classify an output 4-cycle as 'triangle' or '4cycle' provenance."""
        a, b, c, d = cycle
        hits = sum(1 for e in ((a, b), (b, c), (c, d), (a, d))
                   if (min(e), max(e)) in self.matching)
        if hits == 0:
            return "4cycle"
        if hits == 1:
            return "triangle"
        raise AssertionError(f"cycle {cycle} uses {hits} matching edges")

    def source_of(self, cycle: FourCycleRecord):
        """Map an output 4-cycle to its source record in the input graph."""
        if self.origin_of(cycle) == "triangle":
            ring = list(cycle)
            for x, y in ((cycle.a, cycle.b), (cycle.b, cycle.c),
                         (cycle.c, cycle.d), (cycle.a, cycle.d)):
                key = (min(x, y), max(x, y))
                if key in self.matching:
                    copy = max(x, y)
                    c_vertex = self.copy_to_source[copy]
                    rest = [v for v in ring if v not in (x, y)]
                    return ("triangle",
                            triangle_record(rest[0], rest[1], c_vertex))
            raise AssertionError("unreachable")
        mapped = [self.copy_to_source.get(v, v) for v in cycle]
        return ("4cycle", four_cycle_record(*mapped))


def triangle_to_4cycle_transform(g: Graph) -> ReductionInstance:
    """Rewrite a tripartite graph so its triangles become 4-cycles.

    Parts A, B, C are read from the labels (0, 1, 2).  A-B and B-C edges
    are kept; every A-C edge is redirected to a fresh copy part C' (one
    copy per C vertex); the identity matching C-C' is added.  A triangle
    (a, b, c) of the input then corresponds one-to-one to the output
    4-cycle a-b-c-c', the unique kind of 4-cycle that crosses the
    matching.  Every matching-free 4-cycle of the output arises from a
    4-cycle of the input (with any C' vertex read back as its C source).
    """
    try:
        proper = validate_kpartite(g, 3)
    except MissingLabelsError:
        proper = False
    if not proper:
        raise NotTripartiteError("labels are not a proper tripartition")
    labels = g.part_label
    assert labels is not None
    c_ids = sorted(v for v in range(g.n) if labels[v] == 2)
    copy_of = {c: g.n + i for i, c in enumerate(c_ids)}
    n_out = g.n + len(c_ids)
    edges: list[tuple[int, int]] = []
    for u, v in g.edges():
        lu, lv = labels[u], labels[v]
        if {lu, lv} == {0, 2}:
            a = u if lu == 0 else v
            c = v if lu == 0 else u
            edges.append((a, copy_of[c]))
        else:
            edges.append((u, v))
    matching = [(c, copy_of[c]) for c in c_ids]
    edges.extend(matching)
    out_labels = dict(labels)
    for c in c_ids:
        out_labels[copy_of[c]] = 3
    out = from_edge_list(edges, n_out, out_labels)
    return ReductionInstance(
        graph=out,
        matching=frozenset(matching),
        copy_to_source={copy_of[c]: c for c in c_ids},
        source_triangle_count=count_triangles(g),
        source_4cycle_count=count_4cycles(g),
    )


def pad_with_c4free(g: Graph, copies: int, q: int) -> Graph:
    """Disjoint union of g with ``copies`` orthogonality-graph components.

    Padding inflates the vertex and edge counts without adding triangles
    or 4-cycles that touch g; the fresh components occupy the id range
    above g.n, so provenance is a simple threshold test.  Part labels of
    g, if any, are kept; padding vertices stay unlabelled.
    """
    if copies < 0:
        raise ValueError("copies must be nonnegative")
    if copies == 0:
        return g
    pad = polarity_graph(q)
    edges = list(g.edges())
    for i in range(copies):
        offset = g.n + i * pad.n
        edges.extend((offset + u, offset + v) for u, v in pad.edges())
    labels = dict(g.part_label) if g.part_label is not None else None
    return from_edge_list(edges, g.n + copies * pad.n, labels)


def sparse_triangle_instance(n_param: int, sigma: float, seed: int) -> Graph:
    """Tripartite instance mimicking the shape of padded hard inputs.

    Produces about n_param^(1-sigma) vertices split evenly into three
    parts, with maximum degree capped at ceil(n_param^(0.5-sigma)).
    Edges come from layered random bipartite matchings between each pair
    of parts; an edge is dropped rather than let an endpoint exceed the
    cap, so the cap always holds.
    """
    if not 0.0 < sigma < 0.5:
        raise BadSigmaError(sigma)
    part = round(n_param ** (1.0 - sigma) / 3.0)
    cap = ceil(n_param ** (0.5 - sigma))
    if part < 1 or cap < 1:
        raise ValueError(
            f"n_param={n_param} too small: derived sizes part={part} cap={cap}")
    rng = random.Random(seed)
    n = 3 * part
    parts = [list(range(i * part, (i + 1) * part)) for i in range(3)]
    deg = [0] * n
    edges: set[tuple[int, int]] = set()
    for xs, ys in ((parts[0], parts[1]), (parts[1], parts[2]),
                   (parts[0], parts[2])):
        for _ in range(cap):
            perm = rng.sample(ys, len(ys))
            for x, y in zip(xs, perm):
                if deg[x] >= cap or deg[y] >= cap:
                    continue
                e = (x, y) if x < y else (y, x)
                if e in edges:
                    continue
                edges.add(e)
                deg[x] += 1
                deg[y] += 1
    labels = {v: v // part for v in range(n)}
    return from_edge_list(sorted(edges), n, labels)


def random_weighted_kpartite(k: int, n_part: int, edge_prob: float,
                             weight_bound: int, seed: int,
                             planted: bool = False) -> WeightedKPartiteGraph:
    """Random k-partite instance with integer edge weights in [-W, W].

    Parts are contiguous id blocks of size n_part.  With planted=True one
    vertex per part is picked, the clique on those vertices is forced to
    exist, and its edge weights are resampled to sum to exactly zero
    while staying within the bound.  Planting guarantees at least one
    zero-weight clique; it says nothing about uniqueness, and unplanted
    instances may contain one by chance.
    """
    if k < 2:
        raise ValueError(f"k={k} must be at least 2")
    if n_part < 1:
        raise ValueError(f"n_part={n_part} must be positive")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge_prob={edge_prob} outside [0, 1]")
    if weight_bound < 1:
        raise ValueError(f"weight_bound={weight_bound} must be at least 1")
    rng = random.Random(seed)
    n = k * n_part
    edges: set[tuple[int, int]] = set()
    for i, j in combinations(range(k), 2):
        for u in range(i * n_part, (i + 1) * n_part):
            for v in range(j * n_part, (j + 1) * n_part):
                if rng.random() < edge_prob:
                    edges.add((u, v))
    chosen: list[int] = []
    if planted:
        chosen = [rng.randrange(i * n_part, (i + 1) * n_part)
                  for i in range(k)]
        edges.update(combinations(sorted(chosen), 2))
    order = sorted(edges)
    weights = {e: rng.randint(-weight_bound, weight_bound) for e in order}
    if planted:
        clique_edges = sorted(combinations(sorted(chosen), 2))
        while True:
            head = [rng.randint(-weight_bound, weight_bound)
                    for _ in clique_edges[:-1]]
            if abs(sum(head)) <= weight_bound:
                break
        for e, w in zip(clique_edges, head):
            weights[e] = w
        weights[clique_edges[-1]] = -sum(head)
    labels = {v: v // n_part for v in range(n)}
    base = from_edge_list(order, n, labels)
    return WeightedKPartiteGraph(base, k, weights, weight_bound)
