import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcconn.atlas import named, relabel_randomly
from arcconn.errors import GraphError
from arcconn.graph import (
    MultiGraph,
    PointConfig,
    Shape,
    canonical_form,
    components,
    degree,
    is_isomorphic,
    make_simple,
    puncture_count,
    recognize_shape,
    shape_graph,
    subdivide,
    suppress_degree2,
)

from conftest import configs, multigraphs


def to_nx(g: MultiGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges.values())
    return h


def test_degree_counts_loops_twice():
    assert degree(MultiGraph((), [(0, 0)]), 0) == 2
    assert all(degree(named("k4"), v) == 3 for v in range(4))
    assert degree(named("figure-eight"), 0) == 4


def test_degree_unknown_vertex():
    with pytest.raises(GraphError):
        degree(named("k4"), 17)


def test_components_examples():
    k4 = named("k4")
    two = MultiGraph((), list(k4.edges.values()) + [(u + 4, v + 4) for u, v in k4.edges.values()])
    assert len(components(k4)) == 1
    assert len(components(two)) == 2
    assert components(MultiGraph()) == []


def test_subdivide_examples():
    sub = subdivide(MultiGraph((), [(0, 1)]), PointConfig({0: 1}))
    assert sub.graph.num_vertices == 3 and len(sub.marked) == 1
    (m,) = sub.marked
    assert sub.graph.neighbors(m) == {0, 1}

    loop = subdivide(MultiGraph((), [(0, 0)]), PointConfig({0: 2}))
    assert loop.graph.num_edges == 3 and recognize_shape(loop.graph) is Shape.CYCLE

    k4 = subdivide(named("k4"), PointConfig({e: 1 for e in range(6)}))
    assert (k4.graph.num_vertices, k4.graph.num_edges) == (10, 12)


def test_subdivide_rejects_unknown_edge():
    with pytest.raises(GraphError):
        subdivide(named("k4"), PointConfig({99: 1}))


def test_point_config_requires_positive_counts():
    with pytest.raises(GraphError):
        PointConfig({0: 0})


def test_suppress_examples():
    k4 = named("k4")
    sub = subdivide(k4, PointConfig({e: 1 for e in range(6)})).graph
    assert is_isomorphic(suppress_degree2(sub)[0], k4)
    cyc, _ = suppress_degree2(named("cycle-9"))
    assert (cyc.num_vertices, list(cyc.edges.values())) == (1, [(8, 8)])
    path, _ = suppress_degree2(named("path-4"))
    assert list(path.edges.values()) == [(0, 3)]


def test_puncture_examples():
    assert puncture_count(named("cycle-6"), {0, 3}) == 2
    assert puncture_count(named("figure-eight"), {0}) == 2
    k5m = named("k5-minus-edge")
    ids = {k5m.label(v): v for v in k5m.vertices}
    # DERIVED: barycentric count; b and e keep one component each, the edges ac, ad, cd float
    assert puncture_count(k5m, {ids["a"], ids["c"], ids["d"]}) == 5


def test_puncture_matches_barycentric_model():
    for g in (named("k5-minus-edge"), named("theta"), named("happy-face"), named("lollipop")):
        bary = subdivide(g, PointConfig({e: 1 for e in g.edges})).graph
        for r in range(min(3, g.num_vertices) + 1):
            for s in itertools.combinations(g.vertices, r):
                rest = bary.induced(v for v in bary.vertices if v not in s)
                assert puncture_count(g, s) == len(components(rest))


def test_shape_examples():
    assert recognize_shape(named("cycle-100")) is Shape.CYCLE
    bowtie = MultiGraph.from_edge_list([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    assert recognize_shape(bowtie) is Shape.FIGURE_EIGHT
    assert recognize_shape(named("k4")) is Shape.OTHER
    for shape in Shape:
        if shape is not Shape.OTHER:
            assert recognize_shape(shape_graph(shape)) is shape


def test_isomorphism_examples():
    k4 = named("k4")
    assert is_isomorphic(k4, relabel_randomly(k4, 3))
    c6 = named("cycle-6")
    two_c3 = MultiGraph.from_edge_list([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_isomorphic(c6, two_c3)
    assert not is_isomorphic(MultiGraph((), [(0, 1), (0, 1)]), named("path-3"))


def test_make_simple_is_simple_and_homeomorphic():
    for name in ("theta", "figure-eight", "baguette", "happy-face", "loop"):
        g = named(name)
        h = make_simple(g)
        assert h.is_simple()
        assert recognize_shape(h) is recognize_shape(g)


@given(multigraphs(), st.data())
def test_shape_invariant_under_subdivision(g, data):
    cfg = data.draw(configs(g))
    assert recognize_shape(subdivide(g, cfg).graph) is recognize_shape(g)


@given(multigraphs(), st.data())
def test_suppress_idempotent_and_homeomorphic(g, data):
    once, _ = suppress_degree2(g)
    assert suppress_degree2(once)[0] == once
    cfg = data.draw(configs(g))
    assert is_isomorphic(suppress_degree2(subdivide(g, cfg).graph)[0], once)


@given(multigraphs(max_vertices=7), st.data())
def test_puncture_monotone(g, data):
    order = data.draw(st.permutations(list(g.vertices)))
    counts = [puncture_count(g, order[:k]) for k in range(len(order) + 1)]
    assert counts[0] == len(components(g))
    assert counts == sorted(counts)


@given(multigraphs())
def test_degree_sum(g):
    assert sum(degree(g, v) for v in g.vertices) == 2 * g.num_edges


@given(multigraphs(max_vertices=7, max_edges=10), st.integers(0, 10_000))
def test_isomorphism_agrees_with_networkx(g, seed):
    h = relabel_randomly(g, seed)
    assert is_isomorphic(g, h)
    assert canonical_form(g) == canonical_form(h)


@given(multigraphs(max_vertices=6, max_edges=8), multigraphs(max_vertices=6, max_edges=8))
def test_canonical_form_matches_networkx(g, h):
    same = nx.is_isomorphic(to_nx(g), to_nx(h))
    assert is_isomorphic(g, h) == same
    assert (canonical_form(g) == canonical_form(h)) == same
