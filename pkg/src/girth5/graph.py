"""Simple undirected graphs with bitset rows, short-cycle checks and graph6 I/O.

Vertices are ``0..n-1``. Each vertex keeps its neighbourhood as an int bitmask,
which makes common-neighbour and distance-3 queries a handful of big-int ops.
Graphs are immutable; the mutating helpers return new graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    EdgeExists,
    MalformedGraph6,
    NotBipartitioned,
    SameVertex,
)

INFINITE = math.inf
PARTS = ("X", "Y")


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on ``range(n)``.

    ``parts`` optionally tags every vertex with ``"X"`` or ``"Y"``; when present,
    every edge must join the two parts. Equality and hashing ignore the tags.
    """

    __slots__ = ("n", "adj", "parts", "_nbrs", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), parts: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if rows[u] >> v & 1:
                raise ValueError(f"repeated edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._init(n, tuple(rows), parts)

    def _init(self, n, rows, parts):
        self.n = n
        self.adj = rows
        self._nbrs = None
        self._m = None
        if parts is not None:
            parts = tuple(parts)
            if len(parts) != n or any(p not in PARTS for p in parts):
                raise ValueError("parts must tag each vertex with 'X' or 'Y'")
            for u, v in self.edges():
                if parts[u] == parts[v]:
                    raise ValueError(f"edge ({u}, {v}) lies inside part {parts[u]}")
        self.parts = parts

    @classmethod
    def from_rows(cls, rows: Sequence[int], parts: Optional[Sequence[str]] = None) -> "Graph":
        """Build from adjacency bitmasks (checked for symmetry and loops)."""
        rows = tuple(rows)
        n = len(rows)
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full or r >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for w in bits(r):
                if not rows[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        g = cls.__new__(cls)
        g._init(n, rows, parts)
        return g

    # -- basic queries -----------------------------------------------------
    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._nbrs is None:
            self._nbrs = tuple(tuple(bits(r)) for r in self.adj)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def m(self) -> int:
        if self._m is None:
            self._m = sum(self.degrees()) // 2
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def part(self, label: str) -> list[int]:
        if self.parts is None:
            raise NotBipartitioned("graph carries no bipartition labels")
        return [v for v in range(self.n) if self.parts[v] == label]

    # -- derived graphs ----------------------------------------------------
    def with_edges(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = (), keep_parts: bool = False) -> "Graph":
        """Return a copy with ``remove`` deleted then ``add`` inserted."""
        rows = list(self.adj)
        for u, v in remove:
            if not rows[u] >> v & 1:
                raise ValueError(f"edge ({u}, {v}) not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        for u, v in add:
            if u == v:
                raise SameVertex(f"loop at vertex {u}")
            if rows[u] >> v & 1:
                raise EdgeExists(f"edge ({u}, {v}) already present")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph.from_rows(rows, self.parts if keep_parts else None)

    def delete_vertex(self, v: int) -> "Graph":
        """Remove ``v``; higher vertices shift down by one, parts are kept."""
        low = (1 << v) - 1
        rows = []
        for w, r in enumerate(self.adj):
            if w != v:
                rows.append((r & low) | (r >> (v + 1) << v))
        parts = None if self.parts is None else self.parts[:v] + self.parts[v + 1:]
        return Graph.from_rows(rows, parts)

    def relabeled(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        pos = {old: new for new, old in enumerate(order)}
        if sorted(pos) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        return Graph(self.n, [(pos[u], pos[v]) for u, v in self.edges()])

    # -- dunder ------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- cycles ------------------------------------------------------------------

def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``INFINITE`` for a forest.

    Breadth-first search from every vertex; a non-tree edge between depths
    ``a`` and ``b`` closes a closed walk of length ``a + b + 1`` through the
    root, and the minimum over all roots is the girth. Searches stop once the
    depth alone cannot beat the best cycle found.
    """
    best = INFINITE
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            d = dist[frontier[0]]
            if 2 * d + 1 >= best:
                break
            nxt = []
            for v in frontier:
                for w in bits(adj[v]):
                    if w == parent[v]:
                        continue
                    if w in dist:
                        best = min(best, d + dist[w] + 1)
                    else:
                        dist[w] = d + 1
                        parent[w] = v
                        nxt.append(w)
            frontier = nxt
    return best


@dataclass(frozen=True)
class FreenessCheck:
    """Outcome of a {C3, C4} test; falsy when a short cycle exists."""

    free: bool
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self):
        return self.free


def _has_short_cycle(adj: Sequence[int]) -> bool:
    for v, nb in enumerate(adj):
        seen = 0
        vbit = 1 << v
        for w in bits(nb):
            if adj[w] & nb:
                return True
            s = adj[w] & ~vbit
            if s & seen:
                return True
            seen |= s
    return False


def short_cycle_witness(g: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically least triangle, else least 4-cycle, in cycle order.

    Triangles take priority over 4-cycles. The cycle starts at its minimum
    vertex and proceeds towards the smaller of that vertex's two cycle neighbours.
    """
    adj = g.adj
    for a in range(g.n):
        for b in bits(adj[a] >> (a + 1) << (a + 1)):
            common = adj[a] & adj[b] >> (b + 1) << (b + 1)
            if common:
                c = (common & -common).bit_length() - 1
                return (a, b, c)
    best = None
    for a in range(g.n):
        above = ~((1 << (a + 1)) - 1)
        for c in range(a + 1, g.n):
            common = adj[a] & adj[c] & above
            if common.bit_count() >= 2:
                it = bits(common)
                b, d = next(it), next(it)
                key = tuple(sorted((a, b, c, d)))
                if best is None or key < best[0]:
                    best = (key, (a, b, c, d))
        if best is not None:
            return best[1]
    return None


def is_girth5_free(g: Graph) -> FreenessCheck:
    """True iff ``g`` has neither a triangle nor a 4-cycle; carries a witness otherwise."""
    if not _has_short_cycle(g.adj):
        return FreenessCheck(True)
    return FreenessCheck(False, short_cycle_witness(g))


def ball(g: Graph, v: int, radius: int) -> int:
    """Bitmask of vertices at distance at most ``radius`` from ``v``."""
    reach = frontier = 1 << v
    for _ in range(radius):
        grown = 0
        for w in bits(frontier):
            grown |= g.adj[w]
        frontier = grown & ~reach
        if not frontier:
            break
        reach |= frontier
    return reach


def admissible_edge(g: Graph, u: int, v: int) -> bool:
    """Whether adding ``uv`` keeps a {C3, C4}-free graph free (distance >= 4)."""
    if u == v:
        raise SameVertex(f"u == v == {u}")
    if g.has_edge(u, v):
        raise EdgeExists(f"edge ({u}, {v}) already present")
    return not ball(g, u, 3) >> v & 1


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    if u == v:
        raise SameVertex(f"u == v == {u}")
    return frozenset(bits(g.adj[u] & g.adj[v]))


# -- paths of length two -----------------------------------------------------

@dataclass(frozen=True)
class PathCountSummary:
    """Counts of paths ``x - m - y`` (unordered ends)."""

    total: int
    sigma_x: Optional[int] = None
    sigma_y: Optional[int] = None
    subset: Optional[int] = None
    subset_vertices: frozenset = field(default=frozenset())


def _pairs(k: int) -> int:
    return k * (k - 1) // 2


def count_paths2(g: Graph, subset: Optional[Iterable[int]] = None) -> PathCountSummary:
    """Number of paths of length two, per part and with both ends in ``subset``."""
    total = sum(_pairs(d) for d in g.degrees())
    sx = sy = None
    if g.parts is not None:
        xmask = sum(1 << v for v in range(g.n) if g.parts[v] == "X")
        ymask = ((1 << g.n) - 1) & ~xmask
        sx = sum(_pairs((r & xmask).bit_count()) for r in g.adj)
        sy = sum(_pairs((r & ymask).bit_count()) for r in g.adj)
    sa = None
    verts = frozenset()
    if subset is not None:
        verts = frozenset(subset)
        amask = sum(1 << v for v in verts)
        sa = sum(_pairs((r & amask).bit_count()) for r in g.adj)
    return PathCountSummary(total, sx, sy, sa, verts)


def check_P1(g: Graph) -> bool:
    """Every two vertices in the same part have exactly one common neighbour."""
    if g.parts is None:
        raise NotBipartitioned("P1 needs bipartition labels")
    for label in PARTS:
        for u, v in combinations(g.part(label), 2):
            if (g.adj[u] & g.adj[v]).bit_count() != 1:
                return False
    return True


def check_P2(g: Graph) -> bool:
    """Maximum degree at most three."""
    return g.max_degree() <= 3


# -- serialisation -----------------------------------------------------------

def _encode_order(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph6 cannot encode more than 68719476735 vertices")


def graph6_encode(g: Graph) -> bytes:
    """Header-free graph6 bytes (no trailing newline)."""
    out = bytearray(_encode_order(g.n))
    acc = nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    """Parse header-free graph6; rejects anything :func:`graph6_encode` would not emit."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = bytes(data).rstrip(b"\n")
    if not data or any(not 63 <= c <= 126 for c in data):
        raise MalformedGraph6("graph6 bytes must be printable in 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 8-byte order prefix")
        n, pos = 0, 8
        for c in data[2:8]:
            n = n << 6 | (c - 63)
        if n <= 258047:
            raise MalformedGraph6("non-canonical order prefix")
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated 4-byte order prefix")
        n, pos = 0, 4
        for c in data[1:4]:
            n = n << 6 | (c - 63)
        if n < 63:
            raise MalformedGraph6("non-canonical order prefix")
    nslots = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nslots + 5) // 6:
        raise MalformedGraph6(f"expected {(nslots + 5) // 6} adjacency bytes, got {len(body)}")
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for c in body:
        val = c - 63
        for s in range(5, -1, -1):
            if k < nslots:
                if val >> s & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif val >> s & 1:
                raise MalformedGraph6("nonzero padding bits")
            k += 1
    return Graph.from_rows(rows)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ValueError("empty edge list")
    n, m = map(int, rows[0])
    edges = [(int(a), int(b)) for a, b in rows[1:]]
    if len(edges) != m:
        raise ValueError(f"header says {m} edges, found {len(edges)}")
    return Graph(n, edges)


def two_colouring(g: Graph) -> Optional[tuple[str, ...]]:
    """X/Y labels of a proper 2-colouring (lowest vertex of each component in X), or None."""
    colour: list[Optional[str]] = [None] * g.n
    for s in range(g.n):
        if colour[s] is not None:
            continue
        colour[s] = "X"
        stack = [s]
        while stack:
            v = stack.pop()
            other = "Y" if colour[v] == "X" else "X"
            for w in bits(g.adj[v]):
                if colour[w] is None:
                    colour[w] = other
                    stack.append(w)
                elif colour[w] != other:
                    return None
    return tuple(colour)
