import random
import sys
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from girth5.graph import Graph  # noqa: E402


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph(h.number_of_nodes(), [tuple(sorted(e)) for e in h.edges()])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def cycle(k):
    return Graph(k, [(i, (i + 1) % k) if i + 1 < k else (0, k - 1) for i in range(k)])


def path(k):
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen():
    return from_nx(nx.petersen_graph())


def random_graph(rng, n, p):
    return Graph(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def _far(adj, u, v, radius):
    seen, frontier = {u}, {u}
    for _ in range(radius):
        frontier = {w for x in frontier for w in adj[x]} - seen
        seen |= frontier
    return v not in seen


def random_girth5(rng, n, tries=None):
    """Insert random pairs at distance >= 4 (set-based check, independent of the package)."""
    adj = {v: set() for v in range(n)}
    pairs = [(i, j) for j in range(n) for i in range(j)]
    rng.shuffle(pairs)
    for i, j in pairs[: tries or len(pairs)]:
        if _far(adj, i, j, 3):
            adj[i].add(j)
            adj[j].add(i)
    return Graph(n, [(i, j) for i in adj for j in adj[i] if i < j])


def random_c4free_bipartite(rng, a, b, tries=None):
    """Random bipartite X=0..a-1, Y=a..a+b-1 with no two rows sharing two columns."""
    rows = [set() for _ in range(b)]
    cells = [(r, c) for r in range(b) for c in range(a)]
    rng.shuffle(cells)
    for r, c in cells[: tries or len(cells)]:
        if all(len(rows[s] & (rows[r] | {c})) <= 1 for s in range(b) if s != r):
            rows[r].add(c)
    return Graph(a + b, [(c, a + r) for r in range(b) for c in rows[r]], parts=["X"] * a + ["Y"] * b)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def girth5_graphs(draw, max_n=15):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_girth5(random.Random(seed), n)


@pytest.fixture
def rng():
    return random.Random(20241015)
