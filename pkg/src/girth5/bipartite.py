"""Bipartite C4-free side: the closed-form upper bound and a plane-based construction."""

from __future__ import annotations

import math

from .errors import UnsupportedOrder
from .finite_geometry import incidence_graph, supported_orders
from .graph import Graph, bits


def z_upper(n: int) -> int:
    """floor((n/4)(sqrt(2n-3) + 1)), exact for perfect-square radicands."""
    if n < 2:
        raise ValueError("z_upper needs n >= 2")
    # floor((n + x)/4) == floor((n + floor(x))/4) for integer n
    return (n + math.isqrt(n * n * (2 * n - 3))) // 4


def plane_order_for(n: int) -> int:
    """Smallest supported prime power q with 2(q^2+q+1) >= n."""
    for q in supported_orders():
        if 2 * (q * q + q + 1) >= n:
            return q
    raise UnsupportedOrder(f"n={n} exceeds the largest supported plane")


def z_lower_construct(n: int) -> Graph:
    """Bipartite C4-free graph on ``n`` vertices cut down from the next projective plane.

    Starting from the incidence graph of PG(2, q), a vertex of minimum degree
    (lowest id on ties) is deleted until ``n`` vertices remain. Survivors keep
    their relative order and their X/Y labels.
    """
    if n < 2:
        raise ValueError("z_lower_construct needs n >= 2")
    g = incidence_graph(plane_order_for(n))
    alive = (1 << g.n) - 1
    deg = g.degrees()
    for _ in range(g.n - n):
        v = min(bits(alive), key=lambda w: (deg[w], w))
        alive &= ~(1 << v)
        for w in bits(g.adj[v] & alive):
            deg[w] -= 1
    keep = list(bits(alive))
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos]
    return Graph(n, edges, parts=[g.parts[v] for v in keep])


def exact_z(n: int, config=None):
    """Exact z(n, C4) with a labelled witness; see :func:`girth5.exact.exact_z`."""
    from .exact import SearchConfig, exact_z as _exact_z

    return _exact_z(n, config or SearchConfig())
