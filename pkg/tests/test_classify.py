import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcconn.atlas import enumerate_connected_multigraphs, named
from arcconn.classify import (
    COND,
    INFLATED,
    OMEGA,
    check_certificate,
    classify,
    five_conditions,
    is_4ac,
    is_5ac,
    is_6ac,
    is_n_ac,
    is_n_cc,
)
from arcconn.errors import GraphError
from arcconn.graph import MultiGraph, subdivide
from arcconn.oracle import oracle_n_ac

from conftest import configs, multigraphs
from test_decompose import DIAMONDS


def test_k33_is_6ac():
    v = is_n_ac(named("k33"), 6)
    assert v.answer and "inflated" in v.clause


def test_k5_minus_edge_clause_2():
    g = named("k5-minus-edge")
    v = is_n_ac(g, 5)
    assert not v and v.clause == COND.format(2)
    assert sorted(g.label(x) for x in v.certificate["cut"]) == ["a", "c", "d"]
    assert v.certificate["components"] == 5
    assert check_certificate(g, v)


def test_cycle_is_omega():
    v = is_n_ac(named("cycle-7"), OMEGA)
    assert v and v.certificate["shape"] == "cycle"


def test_k4_5ac_not_6ac():
    assert is_n_ac(named("k4"), 5)
    v = is_n_ac(named("k4"), 6)
    assert not v and v.clause == INFLATED
    assert v.certificate["parts"] == [[0], [1], [2], [3]]


def test_internal_deciders():
    bag = named("baguette")
    assert is_4ac(bag) and is_5ac(bag) and not is_6ac(bag)
    assert is_4ac(named("happy-face"))
    v = is_5ac(DIAMONDS)
    assert not v and v.clause == COND.format(3)


def test_cc_examples():
    assert is_n_cc(named("theta"), 2)
    assert is_n_cc(named("cycle-5"), 99)
    assert not is_n_cc(named("k2"), 2)
    assert not is_n_cc(named("lollipop"), 1)
    assert is_n_cc(named("figure-eight"), 1)


def test_classify_examples():
    assert classify(named("path-4")).max_ac == OMEGA
    assert classify(named("k5-minus-edge")).max_ac == 4
    assert classify(named("star")).max_ac == 2
    assert classify(named("cycle-3")).cc_class == "omegacc"
    assert classify(named("k33")).cc_class == "2cc"


def test_edgeless_rejected():
    with pytest.raises(GraphError):
        classify(MultiGraph((0,), []))
    with pytest.raises(GraphError):
        is_n_ac(named("k4"), 0)


def test_n_seven_and_beyond_is_omega():
    for g in enumerate_connected_multigraphs(4):
        assert is_n_ac(g, 7).answer == is_n_ac(g, OMEGA).answer == is_n_ac(g, 40).answer


def test_isolated_vertex_is_not_1ac():
    g = MultiGraph((0, 1, 2), [(0, 1)])
    assert not is_n_ac(g, 1) and not is_n_cc(g, 1)


def test_fails_only_condition_4():
    g = MultiGraph(range(7), [(0, 1), (0, 4), (1, 2), (1, 4), (1, 6), (2, 3), (2, 6), (3, 4), (3, 5), (4, 5), (5, 6)])
    assert [v.answer for v in five_conditions(g)] == [True, True, True, False]
    verdict = is_5ac(g)
    assert verdict.clause == COND.format(4)
    assert check_certificate(g, verdict)
    assert is_4ac(g) and not oracle_n_ac(g, 5).answer


def test_five_conditions_reports_each_clause():
    k5m = five_conditions(named("k5-minus-edge"))
    assert [v.answer for v in k5m] == [True, False, True, True]


@given(multigraphs(max_vertices=6, max_edges=8), st.data())
def test_subdivision_invariance(g, data):
    cfg = data.draw(configs(g))
    a, b = classify(g), classify(subdivide(g, cfg).graph)
    assert (a.max_ac, a.cc_class) == (b.max_ac, b.cc_class)


@given(multigraphs(max_vertices=7, max_edges=10))
def test_certificates_verify(g):
    c = classify(g)
    for verdict in c.per_n.values():
        assert check_certificate(g, verdict), verdict


@given(multigraphs(max_vertices=4, max_edges=5))
def test_agrees_with_oracle(g):
    for n in range(2, 6):
        assert is_n_ac(g, n).answer == oracle_n_ac(g, n).answer
