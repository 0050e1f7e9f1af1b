import sys

import pytest

from gainforest.gaingraph import GainEdge
from gainforest.nbc import NbcTree
from gainforest.trees import PlaneTree


@pytest.fixture
def fig_llbs() -> PlaneTree:
    """Seven-vertex LLBS rooted at 4 with right chain 1-3-5-7."""
    return PlaneTree.build(2, 4, {(4, 1): 1, (1, 2): 3, (3, 2): 5, (5, 1): 2, (5, 2): 7, (7, 1): 6})


@pytest.fixture
def fig_nbc() -> NbcTree:
    pairs = [(1, 4), (3, 4), (2, 4), (2, 5), (3, 7), (6, 7)]
    return NbcTree(frozenset(range(1, 8)), frozenset(GainEdge(i, j, 1) for i, j in pairs))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
