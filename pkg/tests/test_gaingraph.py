import pytest

from gainforest.gaingraph import (
    Circle,
    GainEdge,
    GainGraph,
    circle_gain,
    edge,
    enumerate_balanced_circles,
    enumerate_circles,
    is_balanced,
    linial,
    make_interval_gain_graph,
    reorient,
    shi,
)


def test_interval_graph_examples():
    g = make_interval_gain_graph(2, 1, 1)
    assert g.vertices == {1, 2} and g.edges == {GainEdge(1, 2, 1)}
    assert make_interval_gain_graph(2, 0, 2).edges == {GainEdge(1, 2, x) for x in (0, 1, 2)}
    assert len(linial(3).edges) == 3


def test_interval_graph_errors():
    with pytest.raises(ValueError):
        make_interval_gain_graph(0, 1, 1)
    with pytest.raises(ValueError):
        make_interval_gain_graph(3, 2, 1)


def test_reorient():
    assert reorient(GainEdge(1, 2, 1)) == GainEdge(2, 1, -1)
    assert reorient(GainEdge(2, 3, 0)) == GainEdge(3, 2, 0)
    assert GainEdge(5, 4, -2).canonical() == GainEdge(4, 5, 2)
    assert edge(5, 4, -2) == GainEdge(4, 5, 2)


def test_graph_rejects_foreign_endpoint():
    with pytest.raises(ValueError):
        GainGraph(frozenset({1, 2}), frozenset({GainEdge(1, 3, 1)}))


def test_circle_gain_examples():
    tri = Circle((GainEdge(1, 2, 1), GainEdge(2, 3, 1), reorient(GainEdge(1, 3, 1))))
    assert circle_gain(tri) == 1
    assert circle_gain(Circle((GainEdge(1, 2, 0), reorient(GainEdge(1, 2, 1))))) == -1
    four = Circle((GainEdge(1, 3, 1), reorient(GainEdge(2, 3, 1)), GainEdge(2, 4, 1), reorient(GainEdge(1, 4, 1))))
    assert circle_gain(four) == 0


def test_circle_must_close():
    with pytest.raises(ValueError):
        Circle((GainEdge(1, 2, 1), GainEdge(3, 4, 1)))


def test_is_balanced_examples():
    assert is_balanced([GainEdge(1, 2, 1), GainEdge(2, 3, 1)])
    assert not is_balanced(linial(3).edges)
    assert is_balanced([GainEdge(1, 3, 1), GainEdge(2, 3, 1), GainEdge(2, 4, 1), GainEdge(1, 4, 1)])


def test_balanced_circles_examples():
    assert enumerate_balanced_circles(linial(3)) == []
    assert enumerate_balanced_circles(shi(2)) == []
    four = enumerate_balanced_circles(linial(4))
    assert four and all(len(c.edges) == 4 and circle_gain(c) == 0 for c in four)
    assert frozenset(GainEdge(i, j, 1) for i, j in [(1, 3), (2, 3), (2, 4), (1, 4)]) in {c.edge_set() for c in four}


def test_circles_on_digon_graph():
    # K_2^{0,2}: three parallel edges, three digons, none balanced
    cs = enumerate_circles(make_interval_gain_graph(2, 0, 2))
    assert len(cs) == 3
    assert all(circle_gain(c) != 0 for c in cs)


def test_circle_canonical_is_stable():
    c = Circle((GainEdge(1, 3, 1), reorient(GainEdge(2, 3, 1)), GainEdge(2, 4, 1), reorient(GainEdge(1, 4, 1))))
    assert c.canonical() == c.reversed().canonical()
