import pytest

from gainforest.gaingraph import GainEdge, GainGraph, linial, make_interval_gain_graph
from gainforest.heights import HeightFunction, select_coherent_subgraph
from gainforest.nbc import (
    NbcTree,
    broken_circuits,
    count_nbc_sets,
    decompose_by_height,
    enumerate_nbc_sets,
    enumerate_nbc_trees,
    is_nbc,
    is_nbc_tree,
    is_nbc_tree_recursive,
    nbc_spanning_trees,
)

L4_H = HeightFunction({1: 0, 2: 0, 3: 1, 4: 1})
EXCLUDED = [GainEdge(2, 3, 1), GainEdge(1, 4, 1), GainEdge(2, 4, 1)]


def test_broken_circuits_examples():
    assert broken_circuits(linial(3)) == []
    sel = select_coherent_subgraph(linial(4), L4_H)
    assert broken_circuits(sel, L4_H.ekey) == [frozenset(EXCLUDED)]
    one = GainGraph(frozenset({1, 2}), frozenset({GainEdge(1, 2, 1)}))
    assert broken_circuits(one) == []


def test_is_nbc_examples(fig_nbc):
    sel = select_coherent_subgraph(linial(4), L4_H)
    assert is_nbc([], sel)
    assert not is_nbc(EXCLUDED, sel, L4_H.ekey)
    h = fig_nbc.height
    assert is_nbc(fig_nbc.edges, select_coherent_subgraph(linial(7), h), h.ekey)


def test_nbc_set_counts_small():
    assert count_nbc_sets(linial(1)) == 1
    assert count_nbc_sets(linial(2)) == 2
    sets = enumerate_nbc_sets(linial(3))
    assert len(sets) == 7 and all(len(s) <= 2 for s in sets)


@pytest.mark.parametrize(
    "a,b,expected",
    [(1, 1, [1, 2, 7, 36, 246]), (0, 1, [1, 3, 16, 125]), (-1, 1, [1, 4, 30, 336])],
)
def test_nbc_counts_match_known_region_counts(a, b, expected):
    # Linial, Shi (n+1)^(n-1) and Catalan n!C_n
    assert [count_nbc_sets(make_interval_gain_graph(n, a, b)) for n in range(1, len(expected) + 1)] == expected


def test_enumerate_nbc_trees_examples():
    l3 = linial(3)
    h = HeightFunction({1: 0, 2: 0, 3: 1})
    assert [t.edges for t in enumerate_nbc_trees(select_coherent_subgraph(l3, h), h)] == [
        frozenset({GainEdge(1, 3, 1), GainEdge(2, 3, 1)})
    ]
    assert len(enumerate_nbc_trees(select_coherent_subgraph(linial(4), L4_H), L4_H)) == 3
    h = HeightFunction({1: 0, 2: 1, 3: 2})
    assert len(enumerate_nbc_trees(select_coherent_subgraph(l3, h), h)) == 1


def test_recursive_criterion_examples(fig_nbc):
    h = fig_nbc.height
    assert is_nbc_tree_recursive(fig_nbc.edges, select_coherent_subgraph(linial(7), h), h)
    assert not is_nbc_tree_recursive(EXCLUDED, select_coherent_subgraph(linial(4), L4_H), L4_H)
    assert is_nbc_tree_recursive([], GainGraph(frozenset({4}), frozenset()), HeightFunction({4: 0}))


def test_decomposition_examples():
    d = decompose_by_height(linial(3))
    assert {h.vector(): c for h, c in d.items()} == {(0, 0, 1): 1, (0, 1, 1): 1, (0, 1, 2): 1}
    assert sum(d.values()) == len(nbc_spanning_trees(linial(3))) == 3
    assert {h.vector(): c for h, c in decompose_by_height(linial(2)).items()} == {(0, 1): 1}
    assert sum(decompose_by_height(linial(4)).values()) == len(nbc_spanning_trees(linial(4)))


def test_nbc_tree_validation():
    with pytest.raises(ValueError):
        NbcTree(frozenset({1, 2, 3}), frozenset({GainEdge(1, 2, 1)}))
    t = NbcTree.single(5)
    assert t.corner == 5 and t.subcorner == 5


def test_is_nbc_tree_certificate(fig_nbc):
    assert is_nbc_tree(fig_nbc, linial(7))
    assert fig_nbc.corner == 4 and fig_nbc.subcorner == 1
    bad = NbcTree(frozenset({1, 2, 3, 4}), frozenset(EXCLUDED))
    assert not is_nbc_tree(bad, linial(4))
