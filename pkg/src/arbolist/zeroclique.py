"""Exact zero-weight k-clique search via modular hashing and bucketing.

The pipeline takes a k-partite edge-weighted graph, rehashes the weights
so that the sum over any one-vertex-per-part clique is a fixed multiple
of the original sum mod a prime p, partitions the residue range [0, p)
into s intervals, and then only searches the few "admissible" interval
combinations whose sumset can reach 0 mod p.  Every candidate clique
found inside a bucket is re-verified against the original weights, so
the answer is exact regardless of hash collisions.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from itertools import combinations, product
from math import ceil
from time import perf_counter
from typing import Iterator, Mapping, Optional

from .core import Graph, from_edge_list, validate_kpartite
from .errors import BadEpsilonError, BadModulusError, BadSError
from .listing import CliqueRecord, list_kcliques
from .primes import is_prime, next_prime_above

log = logging.getLogger(__name__)

Edge = tuple  # (u, v) with u < v


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def pair_order(k: int) -> list[tuple[int, int]]:
    """Canonical order of part pairs: (0,1), (0,2), ..., (k-2,k-1)."""
    return list(combinations(range(k), 2))


class WeightedKPartiteGraph:
    """A k-partite graph with an integer weight on every edge.

    The base graph must carry labels forming a proper k-partition, every
    edge must have a weight, and weights stay within [-weight_bound,
    weight_bound].
    """

    __slots__ = ("base", "k", "weights", "weight_bound", "_parts")

    def __init__(self, base: Graph, k: int, weights: Mapping[Edge, int],
                 weight_bound: int):
        if not validate_kpartite(base, k):
            raise ValueError("base graph labels are not a proper k-partition")
        if weight_bound < 0:
            raise ValueError("weight_bound must be nonnegative")
        edges = base.edge_set()
        missing = edges - set(weights)
        if missing:
            raise ValueError(f"{len(missing)} edges have no weight")
        extra = set(weights) - edges
        if extra:
            raise ValueError(f"{len(extra)} weighted pairs are not edges")
        for e, w in weights.items():
            if abs(w) > weight_bound:
                raise ValueError(f"|w{e}| = {abs(w)} exceeds bound {weight_bound}")
        self.base = base
        self.k = k
        self.weights = dict(weights)
        self.weight_bound = weight_bound
        parts: list[list[int]] = [[] for _ in range(k)]
        assert base.part_label is not None
        for v in range(base.n):
            parts[base.part_label[v]].append(v)
        self._parts = [sorted(p) for p in parts]

    def parts(self) -> list[list[int]]:
        return [list(p) for p in self._parts]

    def weight(self, u: int, v: int) -> int:
        return self.weights[edge_key(u, v)]


@dataclass(frozen=True)
class HashParams:
    """Multiplier x and per-vertex offset table y of one hashing round.

    ``y[v][j]`` is vertex v's offset toward part j; the row entries over
    all parts other than v's own sum to 0 mod p, which is what makes the
    offsets cancel over any one-vertex-per-part clique.
    """

    p: int
    x: int
    y: tuple[tuple[int, ...], ...]


def sample_hash_params(g: WeightedKPartiteGraph, p: int, seed: int) -> HashParams:
    """Draw hashing parameters: x uniform in [1, p), zero-sum offset rows.

    Requires p prime and p > k^2 * weight_bound, so a nonzero original
    clique sum can never alias to 0 mod p.
    """
    if not is_prime(p):
        raise BadModulusError(f"p={p} is not prime")
    if p <= g.k * g.k * g.weight_bound:
        raise BadModulusError(
            f"p={p} not above k^2*W = {g.k * g.k * g.weight_bound}")
    rng = random.Random(seed)
    x = rng.randrange(1, p)
    labels = g.base.part_label
    assert labels is not None
    rows: list[tuple[int, ...]] = []
    for v in range(g.base.n):
        own = labels[v]
        row = [0] * g.k
        others = [j for j in range(g.k) if j != own]
        acc = 0
        for j in others[:-1]:
            val = rng.randrange(p)
            row[j] = val
            acc += val
        row[others[-1]] = (-acc) % p
        rows.append(tuple(row))
    return HashParams(p=p, x=x, y=tuple(rows))


def apply_hash_weights(g: WeightedKPartiteGraph,
                       params: HashParams) -> dict[Edge, int]:
    """Hashed weight of each edge: x*w(u,v) + y[u][part(v)] + y[v][part(u)]."""
    labels = g.base.part_label
    assert labels is not None
    p, x, y = params.p, params.x, params.y
    out: dict[Edge, int] = {}
    for (u, v), w in g.weights.items():
        out[(u, v)] = (x * w + y[u][labels[v]] + y[v][labels[u]]) % p
    return out


def hash_weights(g: WeightedKPartiteGraph, p: int,
                 seed: int) -> tuple[dict[Edge, int], HashParams]:
    """Sample parameters and rehash every edge weight into [0, p).

    For any clique with one vertex per part, the hashed weights sum to
    x times the original sum mod p: the y offsets pair up by vertex and
    each vertex's row cancels by construction.
    """
    params = sample_hash_params(g, p, seed)
    return apply_hash_weights(g, params), params


@dataclass(frozen=True)
class IntervalPartition:
    """[0, p) split into s half-open intervals of length ceil(p/s).

    The last interval may be shorter.  When the requested s would leave
    empty trailing intervals (possible since lengths round up), s is
    reduced to the number of nonempty intervals and the reduction is
    reported through ``requested_s`` and a log line.
    """

    p: int
    s: int
    requested_s: int
    length: int
    bounds: tuple[tuple[int, int], ...]

    def interval_of(self, value: int) -> int:
        if not 0 <= value < self.p:
            raise ValueError(f"value {value} outside [0, {self.p})")
        return value // self.length


def partition_intervals(p: int, s: int) -> IntervalPartition:
    if s < 1 or s > p:
        raise BadSError(s, p)
    length = ceil(p / s)
    actual = ceil(p / length)
    if actual != s:
        log.info("reduced s from %d to %d to avoid empty intervals (p=%d)",
                 s, actual, p)
    bounds = tuple((i * length, min((i + 1) * length, p))
                   for i in range(actual))
    return IntervalPartition(p=p, s=actual, requested_s=s, length=length,
                             bounds=bounds)


BucketKey = tuple  # one interval index per part pair, in pair_order() order


def admissible_tuples(partition: IntervalPartition, k: int) -> Iterator[BucketKey]:
    """Keys whose interval sumset contains 0 mod p, in lexicographic order.

    A key assigns one interval to each of the C(k,2) part pairs; the sums
    of one value per interval form a contiguous integer range, so the key
    is admissible iff that range contains a multiple of p.  The first
    C(k,2)-1 indices are enumerated outright; for each prefix the last
    index must place a multiple of p inside the reachable range, which
    pins it down to a handful of candidates, so the total number of keys
    emitted stays O(s^(C(k,2)-1)) rather than s^C(k,2).
    """
    pairs = len(pair_order(k))
    p = partition.p
    s = partition.s
    length = partition.length
    bounds = partition.bounds
    for prefix in product(range(s), repeat=pairs - 1):
        lo = sum(bounds[i][0] for i in prefix)
        hi = sum(bounds[i][1] - 1 for i in prefix)
        found: set[int] = set()
        multiple = -(-lo // p) * p
        while multiple <= hi + p - 1:
            x_lo = max(0, multiple - hi)
            x_hi = min(p - 1, multiple - lo)
            if x_lo <= x_hi:
                for j in range(x_lo // length, min(x_hi // length, s - 1) + 1):
                    a, b = bounds[j]
                    if lo + a <= multiple <= hi + b - 1:
                        found.add(j)
            multiple += p
        for j in sorted(found):
            yield prefix + (j,)


def extract_bucket(g: WeightedKPartiteGraph, hashed: Mapping[Edge, int],
                   key: BucketKey, partition: IntervalPartition) -> Graph:
    """Subgraph keeping, per part pair, the edges hashed into the keyed interval.

    Vertex ids and part labels are preserved, so cliques listed in the
    bucket are directly cliques of the original graph.
    """
    pairs = pair_order(g.k)
    if len(key) != len(pairs):
        raise ValueError(f"key has {len(key)} entries, expected {len(pairs)}")
    slot = {pq: i for i, pq in enumerate(pairs)}
    labels = g.base.part_label
    assert labels is not None
    kept = []
    for e in g.base.edges():
        lu, lv = labels[e[0]], labels[e[1]]
        want = key[slot[(lu, lv) if lu < lv else (lv, lu)]]
        if partition.interval_of(hashed[e]) == want:
            kept.append(e)
    return from_edge_list(kept, g.base.n, dict(labels))


def choose_s(n: int, k: int, epsilon: float) -> int:
    """Bucket count balancing bucket size against the number of buckets.

    Evaluates round(n^(2*epsilon / (k^2 - 3k + 2))), at least 1.
    """
    if not 0.0 < epsilon < 1.0:
        raise BadEpsilonError(epsilon)
    if k < 3:
        raise ValueError(f"k={k} must be at least 3")
    if n < 2:
        raise ValueError(f"n={n} must be at least 2")
    exponent = 2.0 * epsilon / (k * k - 3 * k + 2)
    return max(1, round(n ** exponent))


@dataclass
class SolveReport:
    """Outcome and accounting of one zero-clique search."""

    witness: Optional[CliqueRecord]
    witness_sum: Optional[int]
    p: int
    s: int
    buckets_examined: int = 0
    cliques_listed_total: int = 0
    hash_s: float = 0.0
    extract_s: float = 0.0
    search_s: float = 0.0

    @property
    def found(self) -> bool:
        return self.witness is not None


def solve_zero_kclique(g: WeightedKPartiteGraph, k: int, s: int,
                       seed: int) -> SolveReport:
    """Find some one-vertex-per-part k-clique of total weight zero, if any.

    Chooses p as the smallest prime above max(k^2 * weight_bound, n),
    hashes the weights, and walks the admissible bucket keys in
    lexicographic order, listing the cliques of each extracted bucket.
    Every listed clique is checked against the original weights, and the
    first exact hit wins, so the search is deterministic for a fixed
    seed.  A zero-sum clique always lands in the bucket determined by its
    own hashed edge weights, and that key is admissible, so an existing
    witness cannot be missed.

    Buckets are independent of each other and could be handed to
    concurrent workers; this implementation walks them sequentially.
    """
    if k < 3:
        raise ValueError(f"k={k} must be at least 3")
    if g.k != k:
        raise ValueError(f"instance has {g.k} parts, expected {k}")
    if any(not part for part in g.parts()):
        raise ValueError("every part must be nonempty")
    t0 = perf_counter()
    p = next_prime_above(max(k * k * g.weight_bound, g.base.n))
    hashed, params = hash_weights(g, p, seed)
    partition = partition_intervals(p, s)
    report = SolveReport(witness=None, witness_sum=None, p=p, s=partition.s)
    report.hash_s = perf_counter() - t0

    for key in admissible_tuples(partition, k):
        b0 = perf_counter()
        bucket = extract_bucket(g, hashed, key, partition)
        b1 = perf_counter()
        report.extract_s += b1 - b0
        report.buckets_examined += 1

        hit: list[CliqueRecord] = []

        def check(record: CliqueRecord):
            total = sum(g.weight(u, v) for u, v in combinations(record, 2))
            if total == 0:
                hit.append(record)
                return True
            return None

        stats = list_kcliques(bucket, k, check)
        report.search_s += perf_counter() - b1
        report.cliques_listed_total += stats.emitted_count
        if hit:
            report.witness = hit[0]
            report.witness_sum = 0
            break
    return report
