"""Exact ex(n, {C3, C4}) and z(n, C4) for small n by branch and bound.

General mode searches edge slots ordered by (larger endpoint, smaller
endpoint). With symmetry pruning on, the search is rooted at a vertex of
maximum degree ``D``: vertex 0 is joined to ``1..D``, the remaining vertices
are laid out in consecutive blocks hanging off ``1..D`` with nonincreasing
block sizes, and only edges between remaining vertices are left free.

Bipartite mode chooses the rows of the smaller side one at a time as
column subsets with pairwise intersections of size at most one.
"""

from __future__ import annotations

import heapq
import math
import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Optional

from .errors import LimitExceeded, TableMismatch
from .graph import Graph, bits, graph6_encode, is_girth5_free

DEFAULT_LIMIT = 12
EXTENDED_LIMIT = 14

# Values cited for the small cases; checked by verify_small_table.
REFERENCE_EX = {6: 6, 11: 16, 12: 18, 14: 23}
REFERENCE_Z = {6: 6}


@dataclass(frozen=True)
class SearchConfig:
    limit: int = DEFAULT_LIMIT
    extended: bool = False
    threads: int = 1
    girth_pruning: bool = True
    bound_pruning: bool = True
    symmetry_pruning: bool = True
    incumbent_cutoff: bool = True

    def check(self, n: int):
        top = EXTENDED_LIMIT if self.extended else self.limit
        if n < 0 or n > top:
            raise LimitExceeded(f"n={n} exceeds the exact-search limit {top}")


@dataclass
class SearchOutcome:
    n: int
    mode: str  # "girth5" or "bipartite"
    value: int
    witness: Graph
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def witness_g6(self) -> str:
        return graph6_encode(self.witness).decode()


def moore_bound(n: int) -> int:
    """floor((n/2) sqrt(n-1)): a girth-5 graph has average degree at most sqrt(n-1)."""
    if n < 2:
        return 0
    # e <= (n/2) sqrt(n-1)  <=>  4 e^2 <= n^2 (n-1)
    e = math.isqrt(n * n * (n - 1) // 4)
    while 4 * (e + 1) ** 2 <= n * n * (n - 1):
        e += 1
    while 4 * e * e > n * n * (n - 1):
        e -= 1
    return e


# -- general mode ------------------------------------------------------------

class _Incumbent:
    """Best value seen so far; only ever raised."""

    def __init__(self, value: int, shared=None):
        self.local = value
        self.shared = shared

    def get(self) -> int:
        if self.shared is not None:
            v = self.shared.value
            if v > self.local:
                self.local = v
        return self.local

    def raise_to(self, value: int):
        if value > self.local:
            self.local = value
        if self.shared is not None:
            with self.shared.get_lock():
                if value > self.shared.value:
                    self.shared.value = value


@dataclass
class _Root:
    """Fixed edges, free slots and a degree cap for one search subtree."""

    fixed: list
    slots: list
    cap: int


def _roots(n: int, cfg: SearchConfig, lowest_degree: int) -> list[_Root]:
    if not cfg.symmetry_pruning:
        slots = [(i, j) for j in range(n) for i in range(j)]
        return [_Root([], slots, max(n - 1, 0))]
    roots = []
    for D in range(max(lowest_degree, 1), n):
        rest = n - 1 - D
        for sizes in _block_sizes(rest, D, D - 1):
            fixed = [(0, i) for i in range(1, D + 1)]
            block = {}
            v = D + 1
            for leader, size in enumerate(sizes, start=1):
                for _ in range(size):
                    fixed.append((leader, v))
                    block[v] = leader
                    v += 1
            slots = [
                (i, j)
                for j in range(D + 1, n)
                for i in range(D + 1, j)
                if block.get(i) is None or block.get(i) != block.get(j)
            ]
            roots.append(_Root(fixed, slots, D))
    return roots


def _block_sizes(total: int, parts: int, cap: int):
    """Nonincreasing tuples of ``parts`` sizes in ``0..cap`` summing to at most ``total``."""
    def rec(prefix, remaining, hi):
        if len(prefix) == parts:
            yield tuple(prefix)
            return
        for s in range(min(hi, remaining), -1, -1):
            yield from rec(prefix + [s], remaining - s, s)
    yield from rec([], total, cap)


class _Search:
    def __init__(self, n: int, cfg: SearchConfig, incumbent: _Incumbent):
        self.n = n
        self.cfg = cfg
        self.inc = incumbent
        self.cap_total = moore_bound(n)
        self.nodes = 0
        self.best_rows: Optional[tuple] = None
        self.best_value = -1
        self.best_key: Optional[bytes] = None

    def run_root(self, root: _Root):
        n = self.n
        adj = [0] * n
        deg = [0] * n
        for u, v in root.fixed:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
        self.adj, self.deg, self.cap = adj, deg, root.cap
        self.slots = root.slots
        ns = len(self.slots)
        # back[i][w]: free slots at index >= i whose larger endpoint is w
        back = [[0] * n for _ in range(ns + 1)]
        inc = [[0] * n for _ in range(ns + 1)]
        for i in range(ns - 1, -1, -1):
            back[i] = back[i + 1][:]
            inc[i] = inc[i + 1][:]
            a, b = self.slots[i]
            back[i][b] += 1
            inc[i][a] += 1
            inc[i][b] += 1
        self.back, self.inc_left = back, inc
        self.hi_from = [b for _, b in self.slots] + [n]
        if self.cfg.girth_pruning and not _rows_free(adj):
            return
        self._dfs(0, len(root.fixed))

    def _upper(self, i: int, e: int) -> int:
        deg, cap = self.deg, self.cap
        back, incl = self.back[i], self.inc_left[i]
        lo = self.hi_from[i]
        by_back = 0
        half = 0
        for w in range(self.n):
            room = cap - deg[w]
            if room <= 0:
                continue
            a = incl[w]
            half += room if room < a else a
            if w >= lo:
                b = back[w]
                by_back += room if room < b else b
        return e + min(len(self.slots) - i, by_back, half // 2)

    def _dfs(self, i: int, e: int):
        self.nodes += 1
        cfg = self.cfg
        best = self.inc.get() if cfg.incumbent_cutoff else self.floor
        if cfg.bound_pruning:
            ub = min(self._upper(i, e), self.cap_total)
            if ub <= best:
                return
        if i == len(self.slots):
            self._leaf(e)
            return
        x, y = self.slots[i]
        adj, deg = self.adj, self.deg
        if deg[x] < self.cap and deg[y] < self.cap:
            ok = True
            if cfg.girth_pruning:
                ax, ay = adj[x], adj[y]
                if ax & ay:
                    ok = False
                else:
                    for w in bits(ax):
                        if adj[w] & ay:
                            ok = False
                            break
            if ok:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
                deg[x] += 1
                deg[y] += 1
                self._dfs(i + 1, e + 1)
                adj[x] ^= 1 << y
                adj[y] ^= 1 << x
                deg[x] -= 1
                deg[y] -= 1
        self._dfs(i + 1, e)

    def _leaf(self, e: int):
        if not self.cfg.girth_pruning and not _rows_free(self.adj):
            return
        if e < self.best_value:
            return
        rows = tuple(self.adj)
        key = graph6_encode(Graph.from_rows(rows))
        if e > self.best_value or key < self.best_key:
            self.best_value, self.best_rows, self.best_key = e, rows, key
        self.inc.raise_to(e)


def _rows_free(adj) -> bool:
    from .graph import _has_short_cycle
    return not _has_short_cycle(adj)


_SHARED = None


def _init_worker(shared):
    global _SHARED
    _SHARED = shared


def _run_roots_worker(args):
    n, cfg, roots, floor = args
    search = _Search(n, cfg, _Incumbent(floor, _SHARED))
    search.floor = floor
    for root in roots:
        if root.cap * n < 2 * (search.inc.get() + 1) and cfg.incumbent_cutoff and cfg.symmetry_pruning:
            continue
        search.run_root(root)
    return search.best_value, search.best_rows, search.nodes


def _search_general(n: int, cfg: SearchConfig, seed: Optional[Graph]) -> SearchOutcome:
    t0 = time.perf_counter()
    if seed is None:
        seed = Graph(n)
    floor = seed.m
    roots = _roots(n, cfg, lowest_degree=-(-2 * (floor + 1) // n) if n else 0)
    results = []
    if cfg.threads <= 1 or len(roots) <= 1:
        results.append(_run_roots_worker((n, cfg, roots, floor)))
    else:
        shared = mp.Value("i", floor)
        chunks = [roots[k::cfg.threads] for k in range(cfg.threads)]
        with ProcessPoolExecutor(cfg.threads, initializer=_init_worker, initargs=(shared,)) as pool:
            results = list(pool.map(_run_roots_worker, [(n, cfg, c, floor) for c in chunks]))
    nodes = sum(r[2] for r in results)
    best_value, best_graph = floor, seed
    for value, rows, _ in results:
        if rows is None:
            continue
        g = Graph.from_rows(rows)
        if value > best_value or (value == best_value and graph6_encode(g) < graph6_encode(best_graph)):
            best_value, best_graph = value, g
    return SearchOutcome(n, "girth5", best_value, best_graph, nodes, time.perf_counter() - t0)


@lru_cache(maxsize=None)
def _exact_ex_cached(n: int, cfg: SearchConfig) -> SearchOutcome:
    seed = None
    if n >= 2:
        prev = _exact_ex_cached(n - 1, cfg).witness
        seed = Graph.from_rows(prev.adj + (0,))
    return _search_general(n, cfg, seed) if n >= 1 else SearchOutcome(0, "girth5", 0, Graph(0))


def exact_ex(n: int, config: SearchConfig = SearchConfig()) -> SearchOutcome:
    """Maximum edge count of an ``n``-vertex graph with girth at least 5."""
    config.check(n)
    return _exact_ex_cached(n, config)


# -- bipartite mode ----------------------------------------------------------

def _extra_edges(rows_left: int, cap: int, pair_budget: int) -> int:
    """Most edges ``rows_left`` rows of degree <= cap can add within ``pair_budget`` column pairs."""
    degs = [0] * rows_left
    total = 0
    budget = pair_budget
    for level in range(cap):
        # raising a row from ``level`` to ``level + 1`` uses ``level`` new pairs
        for r in range(rows_left):
            if budget < level:
                return total
            budget -= level
            degs[r] += 1
            total += 1
    return total


class _BipartiteSearch:
    def __init__(self, a: int, b: int, cfg: SearchConfig, incumbent: _Incumbent, cap_total: int):
        self.a, self.b = a, b
        self.cfg = cfg
        self.inc = incumbent
        self.cap_total = cap_total
        self.nodes = 0
        self.best_value = -1
        self.best_rows = None
        self.best_key = None
        self.col_pairs = a * (a - 1) // 2
        self.row_pairs = b * (b - 1) // 2

    def run(self):
        a, b = self.a, self.b
        full = (1 << a) - 1
        cands = sorted(range(full + 1), reverse=True)
        if not self.cfg.symmetry_pruning:
            self.cands = cands
            self.cap = a
            self._dfs([], 0, 0, [0] * a, 0)
            return
        for d in range(a, -1, -1):
            first = full ^ ((1 << (a - d)) - 1)
            self.cap = d
            self.cands = [c for c in cands if c.bit_count() <= d and c <= first]
            coldeg = [1 if first >> c & 1 else 0 for c in range(a)]
            self._dfs([first], d, d * (d - 1) // 2, coldeg, 0)

    def _dfs(self, rows, e, used_pairs, coldeg, col_used):
        self.nodes += 1
        cfg = self.cfg
        best = self.inc.get() if cfg.incumbent_cutoff else self.floor
        left = self.b - len(rows)
        if cfg.bound_pruning:
            ub = e + _extra_edges(left, self.cap, self.col_pairs - used_pairs)
            ub = min(ub, e + self._col_room(coldeg, col_used, left), self.cap_total)
            if ub <= best:
                return
        if left == 0:
            self._leaf(rows, e)
            return
        prev = rows[-1] if (rows and cfg.symmetry_pruning) else None
        for c in self.cands:
            if prev is not None and c > prev:
                continue
            if cfg.girth_pruning and any((c & r).bit_count() > 1 for r in rows):
                continue
            k = c.bit_count()
            extra = sum(coldeg[j] for j in bits(c))
            for j in bits(c):
                coldeg[j] += 1
            self._dfs(rows + [c], e + k, used_pairs + k * (k - 1) // 2, coldeg, col_used + extra)
            for j in bits(c):
                coldeg[j] -= 1

    def _col_room(self, coldeg, col_used, left):
        # an edge landing on column j pairs the new row with coldeg[j] earlier rows
        budget = self.row_pairs - col_used
        if budget < 0:
            return -1
        heap = list(coldeg)
        heapq.heapify(heap)
        room = 0
        limit = left * self.cap
        while heap and room < limit:
            c = heapq.heappop(heap)
            if c > budget or c >= self.b:
                break
            budget -= c
            room += 1
            heapq.heappush(heap, c + 1)
        return room

    def _leaf(self, rows, e):
        if e < self.best_value:
            return
        if not self.cfg.girth_pruning:
            for i in range(len(rows)):
                for j in range(i):
                    if (rows[i] & rows[j]).bit_count() > 1:
                        return
        g = _bipartite_graph(self.a, rows)
        key = graph6_encode(g)
        if e > self.best_value or key < self.best_key:
            self.best_value, self.best_rows, self.best_key = e, tuple(rows), key
        self.inc.raise_to(e)


def _bipartite_graph(a: int, rows) -> Graph:
    b = len(rows)
    edges = [(c, a + r) for r, mask in enumerate(rows) for c in bits(mask)]
    return Graph(a + b, edges, parts=["X"] * a + ["Y"] * b)


def _run_sides_worker(args):
    n, cfg, sides, floor = args
    from .bipartite import z_upper
    inc = _Incumbent(floor, _SHARED)
    out = []
    nodes = 0
    for a, b in sides:
        s = _BipartiteSearch(a, b, cfg, inc, z_upper(n))
        s.floor = floor
        s.run()
        nodes += s.nodes
        if s.best_rows is not None:
            out.append((s.best_value, a, s.best_rows))
    return out, nodes


@lru_cache(maxsize=None)
def _exact_z_cached(n: int, cfg: SearchConfig) -> SearchOutcome:
    t0 = time.perf_counter()
    if n <= 1:
        return SearchOutcome(n, "bipartite", 0, Graph(n, parts=["X"] * n))
    # |X| >= |Y|; X runs from ceil(n/2) up, i.e. the smaller side Y from floor(n/2) down
    sides = [(n - b, b) for b in range(n // 2, 0, -1)]
    floor = 0
    if cfg.threads <= 1:
        results = [_run_sides_worker((n, cfg, sides, floor))]
    else:
        shared = mp.Value("i", floor)
        chunks = [sides[k::cfg.threads] for k in range(cfg.threads)]
        with ProcessPoolExecutor(cfg.threads, initializer=_init_worker, initargs=(shared,)) as pool:
            results = list(pool.map(_run_sides_worker, [(n, cfg, c, floor) for c in chunks if c]))
    best = None
    nodes = 0
    for found, k in results:
        nodes += k
        for value, a, rows in found:
            g = _bipartite_graph(a, rows)
            key = (-value, graph6_encode(g))
            if best is None or key < best[0]:
                best = (key, value, g)
    return SearchOutcome(n, "bipartite", best[1], best[2], nodes, time.perf_counter() - t0)


def exact_z(n: int, config: SearchConfig = SearchConfig()) -> SearchOutcome:
    """Maximum edge count of an ``n``-vertex bipartite graph with no 4-cycle."""
    config.check(n)
    return _exact_z_cached(n, config)


# -- the small table ---------------------------------------------------------

@dataclass
class TableRow:
    n: int
    ex: int
    z: Optional[int]
    checks: dict = field(default_factory=dict)
    ex_witness_bipartite: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


@dataclass
class TableReport:
    rows: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def lines(self) -> list[str]:
        out = ["n   ex   z    checks"]
        for r in self.rows:
            marks = " ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in r.checks.items())
            z = "-" if r.z is None else str(r.z)
            out.append(f"{r.n:<3} {r.ex:<4} {z:<4} {marks}")
        return out


def verify_small_table(config: SearchConfig = SearchConfig(), raise_on_mismatch: bool = True) -> TableReport:
    """Exact ex and z for n = 6..12 (13, 14 with the extended budget) checked
    against the reference values and the inequality ex(n) >= z(n) + 1 for n >= 7."""
    from .graph import two_colouring

    top = EXTENDED_LIMIT if config.extended else min(config.limit, DEFAULT_LIMIT)
    rows = []
    prev_ex = None
    for n in range(6, top + 1):
        ex = exact_ex(n, config)
        z = exact_z(n, config)
        row = TableRow(n, ex.value, z.value)
        if n in REFERENCE_EX:
            row.checks["ex_ref"] = ex.value == REFERENCE_EX[n]
        if n in REFERENCE_Z:
            row.checks["z_ref"] = z.value == REFERENCE_Z[n]
        row.checks["ex>=z"] = ex.value >= z.value
        if n >= 7:
            row.checks["ex>=z+1"] = ex.value >= z.value + 1
        else:
            row.checks["ex==z"] = ex.value == z.value
        if prev_ex is not None:
            row.checks["monotone"] = ex.value >= prev_ex
        row.checks["witness"] = bool(is_girth5_free(ex.witness)) and ex.witness.m == ex.value
        row.ex_witness_bipartite = two_colouring(ex.witness) is not None
        prev_ex = ex.value
        rows.append(row)
    report = TableReport(rows)
    if raise_on_mismatch:
        for r in rows:
            if not r.ok:
                bad = [k for k, v in r.checks.items() if not v]
                raise TableMismatch(f"n={r.n}: failed {', '.join(bad)}", n=r.n)
    return report
