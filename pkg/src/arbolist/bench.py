"""Benchmark suites producing machine-independent scaling rows.

Each suite sweeps instance sizes geometrically, runs one lister per
instance, and emits rows holding both wall-time splits and the lister's
inner step counter.  The step counter, normalized by m times a power of
the degeneracy, is the scaling signal; wall time is informational.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Callable, Iterable, Union

from .core import Graph, degeneracy_ordering, from_edge_list
from .generators import polarity_graph, random_gnm, random_weighted_kpartite
from .primes import next_prime_above
from .listing import (
    EnumerationStats,
    list_4cycles,
    list_kcliques,
    list_triangles,
)
from .zeroclique import (
    admissible_tuples,
    extract_bucket,
    hash_weights,
    partition_intervals,
)

PathLike = Union[str, Path]

CSV_HEADER = "gen,n,m,alpha_proxy,algo,pre_s,emit_s,count,steps"


@dataclass
class BenchRecord:
    """One benchmark row; field order matches the CSV header."""

    gen: str
    n: int
    m: int
    alpha_proxy: int
    algo: str
    pre_s: float
    emit_s: float
    count: int
    steps: int

    def __post_init__(self):
        if "," in self.gen or "," in self.algo:
            raise ValueError("gen and algo strings must not contain commas")
        if self.pre_s < 0 or self.emit_s < 0:
            raise ValueError("times must be nonnegative")


def _record(gen: str, g: Graph, algo: str,
            stats: EnumerationStats) -> BenchRecord:
    return BenchRecord(
        gen=gen, n=g.n, m=g.m,
        alpha_proxy=degeneracy_ordering(g).degeneracy,
        algo=algo,
        pre_s=stats.preprocess_time, emit_s=stats.emit_time,
        count=stats.emitted_count, steps=stats.steps,
    )


def write_csv(path: PathLike, records: Iterable[BenchRecord],
              append: bool = True) -> None:
    """Append rows, writing the header only when the file starts empty."""
    path = Path(path)
    fresh = not (append and path.exists() and path.stat().st_size > 0)
    mode = "a" if append else "w"
    with open(path, mode, encoding="ascii", newline="") as fh:
        writer = csv.writer(fh)
        if fresh or not append:
            writer.writerow(CSV_HEADER.split(","))
        for r in records:
            writer.writerow([getattr(r, f.name) for f in fields(BenchRecord)])


def read_csv(path: PathLike) -> list[BenchRecord]:
    with open(path, "r", encoding="ascii", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != CSV_HEADER.split(","):
            raise ValueError(f"unexpected CSV header {header!r}")
        out = []
        for row in reader:
            gen, n, m, alpha, algo, pre_s, emit_s, count, steps = row
            out.append(BenchRecord(gen, int(n), int(m), int(alpha), algo,
                                   float(pre_s), float(emit_s), int(count),
                                   int(steps)))
        return out


def _drain(record) -> None:
    return None


def c4_block_family(t: int, seed: int, base_q: int = 7) -> Graph:
    """Disjoint union of t four-cycle blocks and one 4-cycle-free core.

    Each block is a complete bipartite graph on 2+2 vertices and holds
    exactly one 4-cycle, so the union has exactly t of them; the
    orthogonality-graph core adds bulk edges without any.  Block vertex
    ids are shuffled so emission order does not trivially follow id
    order.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    core = polarity_graph(base_q)
    n = core.n + 4 * t
    ids = list(range(core.n, n))
    random.Random(seed).shuffle(ids)
    edges = list(core.edges())
    for b in range(t):
        a0, a1, b0, b1 = ids[4 * b:4 * b + 4]
        edges.extend(((a0, b0), (a0, b1), (a1, b0), (a1, b1)))
    return from_edge_list(edges, n)


def suite_triangle_scaling(qs: tuple = (11, 23, 47)) -> list[BenchRecord]:
    rows = []
    for q in qs:
        g = polarity_graph(q)
        stats = list_triangles(g, _drain)
        rows.append(_record(f"polarity q={q}", g, "triangle", stats))
    return rows


def suite_c4_delay(ts: tuple = (10 ** 3, 10 ** 4, 10 ** 5),
                   seed: int = 7) -> list[BenchRecord]:
    rows = []
    for t in ts:
        g = c4_block_family(t, seed)
        stats = list_4cycles(g, _drain)
        rows.append(_record(f"c4blocks t={t} q=7 seed={seed}", g, "c4", stats))
    return rows


def suite_clique_scaling(ns: tuple = (300, 600, 1200), avg_deg: int = 10,
                         k: int = 4, seed: int = 11) -> list[BenchRecord]:
    rows = []
    for n in ns:
        m = n * avg_deg // 2
        g = random_gnm(n, m, seed)
        stats = list_kcliques(g, k, _drain)
        rows.append(_record(f"gnm n={n} m={m} seed={seed}", g,
                            f"clique k={k}", stats))
    return rows


def suite_zeroclique(n_part: int = 40, s: int = 4, edge_prob: float = 0.5,
                     weight_bound: int = 50, instances: int = 2,
                     min_buckets: int = 20) -> list[BenchRecord]:
    """One row per admissible bucket: bucket shape plus a triangle pass.

    Runs the hash-partition-extract pipeline on seeded k=3 instances and
    lists the triangles of every admissible bucket, so rows carry the
    bucket's edge count and degeneracy next to real listing work.
    """
    k = 3
    rows = []
    for seed in range(instances):
        wg = random_weighted_kpartite(k, n_part, edge_prob, weight_bound, seed)
        p = next_prime_above(max(k * k * weight_bound, wg.base.n))
        hashed, _ = hash_weights(wg, p, seed)
        partition = partition_intervals(p, s)
        for key in admissible_tuples(partition, k):
            bucket = extract_bucket(wg, hashed, key, partition)
            stats = list_kcliques(bucket, 3, _drain)
            keytxt = "|".join(str(i) for i in key)
            rows.append(_record(
                f"zc-bucket n_part={n_part} s={partition.s} seed={seed} "
                f"key={keytxt}",
                bucket, "clique k=3", stats))
    if len(rows) < min_buckets:
        raise ValueError(
            f"only {len(rows)} buckets produced, need {min_buckets}")
    return rows


SUITES: dict[str, Callable[[], list[BenchRecord]]] = {
    "triangle-scaling": suite_triangle_scaling,
    "c4-delay": suite_c4_delay,
    "clique-scaling": suite_clique_scaling,
    "zeroclique": suite_zeroclique,
}


def run_suite(name: str, small: bool = False) -> list[BenchRecord]:
    """Run one named suite; small=True shrinks sweeps for smoke tests."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; have {sorted(SUITES)}")
    if not small:
        return SUITES[name]()
    if name == "triangle-scaling":
        return suite_triangle_scaling(qs=(3, 5, 7))
    if name == "c4-delay":
        return suite_c4_delay(ts=(10, 100), seed=7)
    if name == "clique-scaling":
        return suite_clique_scaling(ns=(30, 60), avg_deg=6)
    return suite_zeroclique(n_part=8, instances=2, min_buckets=1)
