"""Path-of-length-two certificates, degree profiles, bounds and sweeps."""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import SubsetOutOfRange, SubsetTooLarge
from .graph import Graph, bits, count_paths2

SWEEP_HEADER = ["n", "e_base", "e_after_swap", "e_after_greedy", "gain", "gain_per_n125", "pivot_degree", "runtime_s"]


@dataclass(frozen=True)
class CertificateResult:
    subset: tuple[int, ...]
    sigma: int  # paths x-m-y with x, y in the subset
    budget: int  # C(|A|, 2)
    inner_edges: int  # edges with both ends in the subset
    max_insertable: int  # m*
    witness: Optional[tuple[int, int, int, int]] = None  # a 4-cycle x-m1-y-m2 on failure

    @property
    def slack(self) -> int:
        return self.budget - self.sigma

    @property
    def verdict(self) -> bool:
        return self.slack >= 0


def _max_insertable(size: int, free_pairs: int) -> int:
    # m edges inside A add at least size*C(2m/size, 2) paths and m adjacent pairs;
    # in a girth-5 graph paths + adjacent pairs <= C(size, 2), so 2 m^2 <= size * free_pairs.
    if free_pairs <= 0:
        return 0
    return math.isqrt(size * free_pairs // 2)


def path2_certificate(g: Graph, subset: Iterable[int]) -> CertificateResult:
    """Count paths of length two with both ends in ``subset`` against C(|A|, 2).

    If the count exceeds the budget, some pair of the subset has two common
    neighbours, and the returned witness is that 4-cycle. The converse fails:
    one bad pair can hide inside an otherwise slack count.
    ``max_insertable`` bounds how many new edges inside the subset a girth-5
    supergraph can carry.
    """
    verts = tuple(sorted(set(subset)))
    if any(not 0 <= v < g.n for v in verts):
        raise SubsetOutOfRange("subset contains a vertex outside the graph")
    if len(verts) < 2:
        raise SubsetOutOfRange("subset needs at least two vertices")
    amask = sum(1 << v for v in verts)
    sigma = count_paths2(g, verts).subset
    size = len(verts)
    budget = size * (size - 1) // 2
    inner = sum((g.adj[v] & amask).bit_count() for v in verts) // 2
    witness = None
    if sigma > budget:
        witness = _c4_in_subset(g, verts)
    return CertificateResult(verts, sigma, budget, inner, _max_insertable(size, budget - sigma - inner), witness)


def _c4_in_subset(g: Graph, verts: Sequence[int]):
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            common = g.adj[x] & g.adj[y]
            if common.bit_count() >= 2:
                it = bits(common)
                m1, m2 = next(it), next(it)
                return (x, m1, y, m2)
    return None


@dataclass(frozen=True)
class DegreeProfile:
    reference: float
    threshold: float
    below: int
    min_degree: int
    mean_degree: float
    max_degree: int


def degree_profile(g: Graph, q: float, tau: float = 0.0) -> DegreeProfile:
    """How many vertices fall below degree ``q - tau``."""
    degs = g.degrees()
    if not degs:
        return DegreeProfile(q, tau, 0, 0, 0.0, 0)
    below = sum(1 for d in degs if d < q - tau)
    return DegreeProfile(q, tau, below, min(degs), sum(degs) / len(degs), max(degs))


@dataclass
class ProbeTrial:
    subset: tuple[int, ...]
    cross_edges: int  # e(g[A, other part])
    sigma1_lower: float
    certificate: CertificateResult

    @property
    def ratio(self) -> float:
        return self.certificate.max_insertable / len(self.subset) ** 1.5


@dataclass
class ProbeReport:
    part: str
    delta: float
    size: int
    seed: int
    trials: list = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(t.certificate.verdict for t in self.trials)

    def ratio_stats(self) -> tuple[float, float, float]:
        r = [t.ratio for t in self.trials]
        return min(r), statistics.median(r), max(r)


def remark_probe(g: Graph, part: str = "X", delta: float = 0.25, trials: int = 20, seed: int = 0) -> ProbeReport:
    """Sample subsets A of one part of size ceil(q^(1+delta)), q = sqrt(n/2).

    For each sample: the edges between A and the other part, the convexity
    lower bound |Y| C(e(A,Y)/|Y|, 2) on the A-ended paths through the other
    part, and the path certificate with its ceiling on insertable edges.
    """
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    members = g.part(part)
    other = g.part("Y" if part == "X" else "X")
    q = math.sqrt(g.n / 2)
    size = math.ceil(q ** (1 + delta))
    if size > len(members):
        raise SubsetTooLarge(f"subset size {size} exceeds part size {len(members)}")
    report = ProbeReport(part, delta, size, seed)
    omask = sum(1 << v for v in other)
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(child)
        pick = tuple(sorted(int(v) for v in rng.choice(members, size=size, replace=False)))
        cross = sum((g.adj[v] & omask).bit_count() for v in pick)
        avg = cross / len(other) if other else 0.0
        sigma1 = len(other) * avg * (avg - 1) / 2
        report.trials.append(ProbeTrial(pick, cross, sigma1, path2_certificate(g, pick)))
    return report


@dataclass
class BoundsReport:
    n: int
    z_upper: int
    half_power: float  # (n/2)^1.5
    quarter_power: float  # n^1.25
    e_zlower: int
    e_dense: int

    @property
    def gain(self) -> int:
        return self.e_dense - self.e_zlower

    @property
    def normalized_gain(self) -> float:
        return self.gain / self.quarter_power

    def lines(self) -> list[str]:
        return [
            f"n                 {self.n}",
            f"z_upper           {self.z_upper}",
            f"(n/2)^1.5         {self.half_power:.4f}",
            f"n^1.25            {self.quarter_power:.4f}",
            f"e(zlower)         {self.e_zlower}",
            f"e(augmented)      {self.e_dense}",
            f"gain              {self.gain}",
            f"gain/n^1.25       {self.normalized_gain:.6f}",
        ]


def bounds_report(n: int) -> BoundsReport:
    from .augment import dense_girth5
    from .bipartite import z_lower_construct, z_upper

    return BoundsReport(n, z_upper(n), (n / 2) ** 1.5, n ** 1.25, z_lower_construct(n).m, dense_girth5(n).m)


@dataclass
class SweepRow:
    q: int
    n: int
    e_base: int
    e_after_swap: int
    e_after_greedy: int
    pivot_degree: int
    runtime: float

    @property
    def swap_gain(self) -> int:
        return self.e_after_swap - self.e_base

    @property
    def gain(self) -> int:
        return self.e_after_greedy - self.e_base

    @property
    def normalized_gain(self) -> float:
        return self.gain / self.n ** 1.25


def sweep(qs: Iterable[int], eps: float = 0.1) -> list[SweepRow]:
    """Augment the full incidence graph of PG(2, q) for each q."""
    from .augment import apply_plan, build_plan, dense_girth5, greedy_add, select_pivot
    from .finite_geometry import incidence_graph

    rows = []
    for q in qs:
        t0 = time.perf_counter()
        g = incidence_graph(q)
        u = select_pivot(g, eps)
        plan = build_plan(g, u, dense_girth5, eps)
        h = apply_plan(g, plan)
        final = greedy_add(h)
        rows.append(SweepRow(q, g.n, g.m, h.m, final.m, plan.t, time.perf_counter() - t0))
    return rows


def sweep_csv(rows: Sequence[SweepRow], timing: bool = False) -> str:
    """CSV text; the runtime column stays empty unless ``timing`` is set."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_HEADER)
    for r in rows:
        w.writerow([r.n, r.e_base, r.e_after_swap, r.e_after_greedy, r.gain,
                    f"{r.normalized_gain:.6f}", r.pivot_degree, f"{r.runtime:.3f}" if timing else ""])
    return buf.getvalue()
