"""Integral gain graphs, their NBC trees, and bijections with local search trees."""

from .gaingraph import GainEdge, GainGraph, make_interval_gain_graph
from .heights import HeightFunction
from .nbc import NbcTree, count_nbc_sets, enumerate_nbc_sets, is_nbc_tree
from .trees import ColouredTree, PlaneTree, enumerate_family

__all__ = [
    "ColouredTree",
    "GainEdge",
    "GainGraph",
    "HeightFunction",
    "NbcTree",
    "PlaneTree",
    "count_nbc_sets",
    "enumerate_family",
    "enumerate_nbc_sets",
    "is_nbc_tree",
    "make_interval_gain_graph",
]
