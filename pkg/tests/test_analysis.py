import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from girth5.analysis import (
    SWEEP_HEADER,
    bounds_report,
    degree_profile,
    path2_certificate,
    remark_probe,
    sweep,
    sweep_csv,
)
from girth5.bipartite import z_lower_construct, z_upper
from girth5.errors import SubsetOutOfRange, SubsetTooLarge
from girth5.finite_geometry import incidence_graph
from girth5.graph import Graph, is_girth5_free

from conftest import cycle, girth5_graphs, graphs, petersen
from oracles import max_insertions


# -- certificate -------------------------------------------------------------

def test_heawood_points_are_tight():
    g = incidence_graph(2)
    cert = path2_certificate(g, range(7))
    assert (cert.sigma, cert.budget, cert.slack, cert.max_insertable) == (21, 21, 0, 0)
    assert cert.verdict and cert.witness is None and cert.inner_edges == 0


def test_c4_fails_with_witness():
    g = cycle(4)
    cert = path2_certificate(g, [0, 2])
    assert cert.sigma == 2 and cert.budget == 1 and not cert.verdict
    x, m1, y, m2 = cert.witness
    assert {x, y} == {0, 2} and {m1, m2} == {1, 3}


def test_c5_certificate():
    cert = path2_certificate(cycle(5), range(5))
    assert cert.sigma == 5 and cert.budget == 10 and cert.inner_edges == 5
    assert cert.max_insertable == 0


def test_empty_graph_certificate():
    cert = path2_certificate(Graph(6), range(6))
    assert cert.sigma == 0 and cert.max_insertable == math.isqrt(6 * 15 // 2)
    assert max_insertions(6, [], range(6)) <= cert.max_insertable


def test_certificate_subset_errors():
    g = cycle(5)
    with pytest.raises(SubsetOutOfRange):
        path2_certificate(g, [0, 5])
    with pytest.raises(SubsetOutOfRange):
        path2_certificate(g, [1])
    with pytest.raises(SubsetOutOfRange):
        path2_certificate(g, [-1, 2])


@settings(max_examples=80, deadline=None)
@given(graphs(11), st.data())
def test_failed_verdict_implies_four_cycle(g, data):
    if g.n < 2:
        return
    sub = data.draw(st.sets(st.integers(0, g.n - 1), min_size=2))
    cert = path2_certificate(g, sub)
    bad = any((g.adj[x] & g.adj[y]).bit_count() >= 2 for x, y in itertools.combinations(sorted(sub), 2))
    # the sum can stay within budget while a single pair is bad, so only one direction holds
    if not cert.verdict:
        assert bad
        x, m1, y, m2 = cert.witness
        assert x in sub and y in sub
        assert all(g.has_edge(a, b) for a, b in [(x, m1), (m1, y), (y, m2), (m2, x)])
    assert (cert.witness is None) == cert.verdict


def test_single_bad_pair_can_pass():
    g = cycle(4)
    cert = path2_certificate(g, [0, 1, 2])
    assert cert.sigma == 2 < cert.budget and cert.verdict


@settings(max_examples=60, deadline=None)
@given(girth5_graphs(12), st.data())
def test_girth5_graphs_always_pass(g, data):
    if g.n < 2:
        return
    sub = data.draw(st.sets(st.integers(0, g.n - 1), min_size=2))
    cert = path2_certificate(g, sub)
    assert cert.verdict and cert.slack >= 0


@settings(max_examples=40, deadline=None)
@given(girth5_graphs(10), st.data())
def test_max_insertable_is_an_upper_bound(g, data):
    if g.n < 2:
        return
    sub = data.draw(st.sets(st.integers(0, g.n - 1), min_size=2, max_size=8))
    cert = path2_certificate(g, sub)
    assert max_insertions(g.n, g.edges(), sub) <= cert.max_insertable


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_plane_parts_have_zero_slack(q):
    g = incidence_graph(q)
    for part in ("X", "Y"):
        cert = path2_certificate(g, g.part(part))
        assert cert.slack == 0 and cert.max_insertable == 0


# -- degree profile ----------------------------------------------------------

def test_degree_profile_examples():
    p = degree_profile(z_lower_construct(100), 7)
    assert (p.below, p.min_degree, p.max_degree) == (4, 6, 8)
    assert p.mean_degree == pytest.approx(7.2)
    assert degree_profile(z_lower_construct(100), 7, 1).below == 0
    assert degree_profile(petersen(), 3).below == 0
    assert degree_profile(Graph(0), 3).below == 0
    assert degree_profile(incidence_graph(9), 9).below == 0
    edgeless = degree_profile(Graph(5), 1)
    assert edgeless.below == 5 and edgeless.max_degree == 0


@settings(max_examples=50, deadline=None)
@given(graphs(14), st.floats(0, 6), st.floats(0, 3))
def test_degree_profile_consistent(g, q, tau):
    p = degree_profile(g, q, tau)
    degs = g.degrees()
    assert p.below == sum(d < q - tau for d in degs)
    if degs:
        assert p.min_degree <= p.mean_degree <= p.max_degree


# -- probe -------------------------------------------------------------------

def test_probe_on_q9():
    rep = remark_probe(incidence_graph(9), "X", 0.25, 5, seed=7)
    assert rep.size == 17 == math.ceil(math.sqrt(91) ** 1.25)
    assert rep.all_pass
    for t in rep.trials:
        assert t.certificate.sigma == t.certificate.budget == 136
        assert t.cross_edges == 170
        assert t.sigma1_lower == pytest.approx(91 * (170 / 91) * (170 / 91 - 1) / 2)
        assert t.certificate.max_insertable == 0
    assert rep.ratio_stats() == (0.0, 0.0, 0.0)


def test_probe_q9_twenty_trials_pinned():
    rep = remark_probe(incidence_graph(9), "X", 0.25, 20, seed=7)
    assert rep.all_pass and len(rep.trials) == 20
    assert {t.certificate.max_insertable for t in rep.trials} == {0}
    assert rep.trials[0].subset == (4, 7, 14, 15, 22, 36, 47, 51, 60, 61, 62, 64, 65, 71, 75, 77, 90)


def test_probe_small_delta():
    rep = remark_probe(incidence_graph(9), "X", 0.01, 3, seed=0)
    assert rep.size == 10 and all(t.certificate.max_insertable >= 0 for t in rep.trials)


def test_probe_surfaces_failures():
    base = incidence_graph(3)
    assert not base.has_edge(0, 13)
    g = base.with_edges(add=[(0, 13)], keep_parts=True)  # a non-incident point-line pair closes 4-cycles
    rep = remark_probe(g, "X", 0.9, 30, seed=3)
    assert not rep.all_pass
    assert all(t.certificate.witness is not None for t in rep.trials if not t.certificate.verdict)


def test_four_cycle_inside_subset_can_still_pass():
    # A is exactly the C4: 4 paths against a budget of 6
    cert = path2_certificate(cycle(4), range(4))
    assert cert.sigma == 4 and cert.budget == 6 and cert.verdict


def test_probe_is_seeded():
    g = incidence_graph(7)
    a = remark_probe(g, "Y", 0.5, 3, seed=1)
    b = remark_probe(g, "Y", 0.5, 3, seed=1)
    assert [t.subset for t in a.trials] == [t.subset for t in b.trials]
    assert all(v >= 57 for t in a.trials for v in t.subset)
    assert a.trials[0].subset != a.trials[1].subset


def test_probe_errors():
    with pytest.raises(ValueError):
        remark_probe(incidence_graph(3), delta=0)
    with pytest.raises(SubsetTooLarge):
        remark_probe(z_lower_construct(18), "X", delta=0.9)


# -- bounds and sweep --------------------------------------------------------

def test_bounds_report_n50():
    r = bounds_report(50)
    assert (r.z_upper, r.e_zlower, r.e_dense, r.gain) == (135, 128, 144, 16)
    assert r.half_power == pytest.approx(125.0)
    assert r.normalized_gain == pytest.approx(16 / 50 ** 1.25)
    assert len(r.lines()) == 8


def test_bounds_report_small():
    assert bounds_report(14).e_dense == 23
    assert bounds_report(14).z_upper == z_upper(14)


def test_sweep_swap_gains():
    rows = sweep([7, 8, 9])
    assert [r.swap_gain for r in rows] == [8, 18, 30]
    assert [r.pivot_degree for r in rows] == [8, 9, 10]
    norm = [r.normalized_gain for r in rows]
    assert norm == sorted(norm)
    for r in rows:
        assert r.e_after_greedy >= r.e_after_swap >= r.e_base


def test_sweep_csv_layout():
    rows = sweep([3, 7])
    text = sweep_csv(rows)
    lines = text.splitlines()
    assert lines[0].split(",") == SWEEP_HEADER
    assert len(SWEEP_HEADER) == 8
    assert all(line.endswith(",") for line in lines[1:])
    assert sweep_csv(sweep([3, 7])) == text
    timed = sweep_csv(rows, timing=True).splitlines()
    assert all(not line.endswith(",") for line in timed[1:])
