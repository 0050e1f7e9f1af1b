import pytest

from gainforest.trees import (
    ColouredTree,
    PlaneTree,
    coloured_to_llks,
    enumerate_coloured_trees,
    enumerate_family,
    is_descent_tree,
    is_lbs,
    is_lks,
    is_llks,
    is_sdescent_tree,
    is_slks,
    left_decomposition,
    llks_height,
    llks_to_coloured,
)
from gainforest.heights import HeightFunction

SMALL = PlaneTree.build(2, 2, {(2, 1): 1, (1, 2): 3})


def test_family_predicates(fig_llbs):
    assert is_lbs(fig_llbs) and is_llks(fig_llbs, 2)
    assert not is_lks(PlaneTree.build(2, 1, {(1, 1): 2}))
    assert is_lks(PlaneTree.build(3, 2, {(2, 2): 1}))
    assert is_slks(PlaneTree.build(3, 2, {(2, 2): 1}))
    assert not is_slks(PlaneTree.build(3, 1, {(1, 2): 2}))


def test_slks_equals_lks_at_arity_two():
    for t in enumerate_family("lks", range(1, 5), 2):
        assert is_slks(t)


def test_plane_tree_rejects_bad_slot():
    with pytest.raises(ValueError):
        PlaneTree.build(2, 1, {(1, 3): 2})


def test_left_decomposition_examples(fig_llbs):
    pieces = left_decomposition(fig_llbs)
    assert [p.root for p in pieces[1]] == [1, 3, 5, 7]
    assert [p.labels for p in pieces[1]] == [{1}, {3}, {2, 5}, {6, 7}]
    assert all(not v for v in left_decomposition(PlaneTree.single(4)).values())
    assert [p.labels for p in left_decomposition(SMALL)[1]] == [{1}, {3}]


def test_llks_height_examples(fig_llbs):
    assert llks_height(fig_llbs) == HeightFunction({4: 1, 5: 1, 7: 1, 1: 0, 2: 0, 3: 0, 6: 0})
    assert llks_height(PlaneTree.single(9)) == HeightFunction({9: 0})
    assert llks_height(SMALL) == HeightFunction({2: 1, 3: 1, 1: 0})


def test_family_counts():
    assert len(enumerate_family("lbs", [1, 2])) == 2
    assert len(enumerate_family("llbs", [1, 2, 3])) == 3
    assert len(enumerate_family("lks", [1, 2], 3)) == 4
    assert len(enumerate_family("slks", [1, 2], 3)) == 3
    assert [len(enumerate_family("lbs", range(1, n + 1))) for n in range(1, 6)] == [1, 2, 7, 36, 246]


def test_enumeration_is_deterministic():
    a = enumerate_family("llks", range(1, 4), 3)
    b = enumerate_family("llks", [3, 1, 2], 3)
    assert a == b and len(set(a)) == len(a)


def test_llks_to_coloured_example(fig_llbs):
    ct = llks_to_coloured(fig_llbs, 2)
    assert ct.root == 4
    assert ct.edges == {(4, 1, 1), (4, 3, 1), (4, 5, 1), (4, 7, 1), (5, 2, 1), (7, 6, 1)}
    assert coloured_to_llks(ct, 2) == fig_llbs


def test_descent_examples():
    leaf = ColouredTree(1, frozenset())
    assert is_descent_tree(leaf) and is_sdescent_tree(leaf)
    assert is_descent_tree(ColouredTree(3, frozenset({(3, 1, 1), (3, 2, 1)})))
    bad = ColouredTree(1, frozenset({(1, 2, 1)}))
    assert not is_descent_tree(bad) and not is_sdescent_tree(bad)
    trees = [ct for ct in enumerate_coloured_trees([1, 2, 3], 1) if is_descent_tree(ct)]
    assert len(trees) == 3
    assert {ct.root for ct in trees} == {2, 3}


def test_coloured_count_formula():
    for c in (1, 2):
        for n in range(1, 5):
            assert len(enumerate_coloured_trees(range(1, n + 1), c)) == c ** (n - 1) * n ** (n - 1)


def test_coloured_to_llks_rejects_non_descent():
    with pytest.raises(ValueError):
        coloured_to_llks(ColouredTree(1, frozenset({(1, 2, 1)})), 2)
