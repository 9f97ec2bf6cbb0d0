from itertools import product

import pytest

from girth5.bipartite import z_upper
from girth5.errors import NotPrimePower, UnsupportedOrder
from girth5.finite_geometry import (
    incidence_graph,
    make_field,
    normalize,
    prime_power,
    projective_points,
    supported_orders,
)
from girth5.graph import check_P1, girth, is_girth5_free

from conftest import to_nx


def test_gf2():
    F = make_field(2)
    assert F.add[1][1] == 0
    assert F.mul[1][1] == 1


def test_gf4_generator_squares_to_x_plus_1():
    F = make_field(4)
    x = 2  # the polynomial x
    assert F.modulus == (1, 1, 1)
    assert F.mul[x][x] == 3  # x + 1


@pytest.mark.parametrize("q", [6, 10, 12, 15, 18, 20, 24, 30])
def test_rejects_composites(q):
    with pytest.raises(NotPrimePower):
        make_field(q)


@pytest.mark.parametrize("q", [37, 49, 64])
def test_rejects_large_orders(q):
    with pytest.raises(UnsupportedOrder):
        make_field(q)


def test_prime_power_decomposition():
    assert prime_power(27) == (3, 3)
    assert prime_power(32) == (2, 5)
    assert prime_power(13) == (13, 1)


@pytest.mark.parametrize("q", supported_orders())
def test_field_axioms(q):
    F = make_field(q)
    add, mul = F.add, F.mul
    E = range(q)
    for a in E:
        assert add[a][0] == a and mul[a][1] == a and mul[a][0] == 0
        assert any(add[a][b] == 0 for b in E)
        if a:
            assert sum(mul[a][b] == 1 for b in E) == 1
        for b in E:
            assert add[a][b] == add[b][a] and mul[a][b] == mul[b][a]
    if q > 16:
        # full triple sweep is O(q^3); sample the larger orders on a grid
        E = range(0, q, 3)
    for a, b, c in product(E, repeat=3):
        assert add[add[a][b]][c] == add[a][add[b][c]]
        assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
        assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]


def test_tables_deterministic():
    assert make_field(9).mul == make_field.__wrapped__(9).mul


@pytest.mark.parametrize("q,count", [(2, 7), (3, 13), (4, 21), (5, 31)])
def test_point_counts(q, count):
    pts = projective_points(make_field(q))
    assert len(pts) == count == q * q + q + 1
    assert pts == sorted(set(pts))
    assert (0, 0, 0) not in pts


def test_normalisation():
    F = make_field(7)
    assert normalize(F, (0, 1, 5)) == (0, 1, 5)
    assert normalize(F, (2, 4, 6)) == (1, 2, 3)
    with pytest.raises(ValueError):
        normalize(F, (0, 0, 0))
    # scalar multiples collapse to one point
    for s in range(1, 7):
        assert normalize(F, tuple(F.mul[s][x] for x in (3, 0, 5))) == normalize(F, (3, 0, 5))


def test_heawood():
    g = incidence_graph(2)
    assert (g.n, g.m) == (14, 21)
    assert set(g.degrees()) == {3}
    import networkx as nx
    assert nx.is_isomorphic(to_nx(g), nx.heawood_graph())


def test_q3():
    g = incidence_graph(3)
    assert (g.n, g.m) == (26, 52) and set(g.degrees()) == {4}


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_incidence_structure(q):
    g = incidence_graph(q)
    N = q * q + q + 1
    assert g.n == 2 * N
    assert g.parts == ("X",) * N + ("Y",) * N
    assert set(g.degrees()) == {q + 1}
    assert g.m == (q + 1) * N == z_upper(2 * N)
    assert is_girth5_free(g)
    if q <= 5:
        assert girth(g) == 6
        assert check_P1(g)


def test_incidence_determinism():
    assert incidence_graph.__wrapped__(4).edges() == incidence_graph.__wrapped__(4).edges()
