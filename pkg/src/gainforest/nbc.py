"""Broken circuits, NBC sets and NBC trees.

An edge order is any key function on edges.  ``lex_key`` is the fixed global
order used for whole-graph counts; ``h.ekey`` is the order O_h of a height
function.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .gaingraph import GainEdge, GainGraph, components, enumerate_balanced_circles, is_forest, is_spanning_tree
from .heights import (
    HeightFunction,
    corner,
    height_from_balanced,
    iter_coherent_heights,
    select_coherent_subgraph,
    subcorner,
)

EdgeKey = Callable[[GainEdge], object]


def lex_key(e: GainEdge) -> tuple[int, int, int]:
    return (e.tail, e.head, e.gain)


def order_from_sequence(seq: Sequence[GainEdge]) -> EdgeKey:
    """Edge order given by position in ``seq`` (e.g. a shuffled edge list)."""
    pos = {e.canonical(): i for i, e in enumerate(seq)}
    return lambda e: pos[e.canonical()]


@dataclass(frozen=True)
class NbcTree:
    vertices: frozenset[int]
    edges: frozenset[GainEdge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(e.canonical() for e in self.edges))
        if not is_spanning_tree(self.vertices, self.edges):
            raise ValueError(f"not a spanning tree of {sorted(self.vertices)}: {sorted(map(str, self.edges))}")

    @classmethod
    def single(cls, v: int) -> NbcTree:
        return cls(frozenset({v}), frozenset())

    @cached_property
    def height(self) -> HeightFunction:
        return height_from_balanced(self.edges, self.vertices)

    @cached_property
    def corner(self) -> int:
        return corner(self.height, self.vertices)

    @cached_property
    def subcorner(self) -> int:
        return subcorner(self.height, GainGraph(self.vertices, self.edges))

    def as_graph(self) -> GainGraph:
        return GainGraph(self.vertices, self.edges)

    def neighbours(self, v: int) -> list[int]:
        return sorted(e.other(v) for e in self.edges if v in e.ends)

    def sorted_edges(self) -> list[GainEdge]:
        return sorted(self.edges)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.sorted_edges())) + "}" if self.edges else "{" + str(min(self.vertices)) + "}"


def broken_circuits(g: GainGraph, key: EdgeKey = lex_key) -> list[frozenset[GainEdge]]:
    out = set()
    for c in enumerate_balanced_circles(g):
        es = c.edge_set()
        out.add(es - {min(es, key=key)})
    return sorted(out, key=lambda s: (len(s), sorted(lex_key(e) for e in s)))


def is_nbc(s: Iterable[GainEdge], g: GainGraph, key: EdgeKey = lex_key, bcs: list | None = None) -> bool:
    es = frozenset(e.canonical() for e in s)
    if not es <= g.edges:
        raise ValueError("edge set is not contained in the graph")
    if not is_forest(g.vertices, es):
        return False
    if bcs is None:
        bcs = broken_circuits(g, key)
    return not any(bc <= es for bc in bcs)


def enumerate_nbc_sets(g: GainGraph, key: EdgeKey = lex_key) -> list[frozenset[GainEdge]]:
    """All NBC sets (the empty set included), grown edge by edge in key order."""
    order = sorted(g.edges, key=key)
    idx = {e: i for i, e in enumerate(order)}
    by_max: dict[int, list[int]] = defaultdict(list)
    for bc in broken_circuits(g, key):
        mask = 0
        for e in bc:
            mask |= 1 << idx[e]
        by_max[max(idx[e] for e in bc)].append(mask)

    vpos = {v: x for x, v in enumerate(sorted(g.vertices))}
    ends = [(vpos[e.tail], vpos[e.head]) for e in order]
    found: list[int] = []

    def grow(start: int, mask: int, comp: tuple[int, ...]) -> None:
        found.append(mask)
        for i in range(start, len(order)):
            a, b = comp[ends[i][0]], comp[ends[i][1]]
            if a == b:
                continue
            new = mask | (1 << i)
            if any(bc & new == bc for bc in by_max.get(i, ())):
                continue
            grow(i + 1, new, tuple(a if c == b else c for c in comp))

    grow(0, 0, tuple(range(len(vpos))))
    return [frozenset(order[i] for i in range(len(order)) if m >> i & 1) for m in found]


def count_nbc_sets(g: GainGraph, key: EdgeKey = lex_key) -> int:
    return len(enumerate_nbc_sets(g, key))


def nbc_spanning_trees(g: GainGraph, key: EdgeKey = lex_key) -> list[NbcTree]:
    return [NbcTree(g.vertices, s) for s in enumerate_nbc_sets(g, key) if len(s) == g.n - 1]


def enumerate_nbc_trees(sel: GainGraph, h: HeightFunction) -> list[NbcTree]:
    """Spanning trees of the selected subgraph ``sel`` that are NBC under O_h."""
    if not sel.is_connected():
        raise ValueError("selected subgraph is disconnected")
    return nbc_spanning_trees(sel, h.ekey)


def is_nbc_tree(t: NbcTree, g: GainGraph) -> bool:
    """Is ``t`` an NBC tree of g[h_t] under O_{h_t}?  The standard certificate."""
    h = t.height
    sel = select_coherent_subgraph(g.restrict(t.vertices), h)
    if not t.edges <= sel.edges:
        return False
    return is_nbc(t.edges, sel, h.ekey)


def is_nbc_tree_recursive(t: Iterable[GainEdge], sel: GainGraph, h: HeightFunction) -> bool:
    """Corner-deletion criterion: strip the corner, check each component
    recursively and that it hangs from its O_h-smallest vertex adjacent to
    the corner in ``sel``."""
    es = frozenset(e.canonical() for e in t)
    if not is_spanning_tree(sel.vertices, es):
        return False
    if not es <= sel.edges:
        return False
    adj: dict[int, set[int]] = defaultdict(set)
    for e in sel.edges:
        adj[e.tail].add(e.head)
        adj[e.head].add(e.tail)

    def rec(vs: frozenset[int], tes: frozenset[GainEdge]) -> bool:
        if len(vs) == 1:
            return True
        c = corner(h, vs)
        inner = [e for e in tes if c not in e.ends]
        for comp in components(vs - {c}, inner):
            hooks = [e.other(c) for e in tes if c in e.ends and e.other(c) in comp]
            if len(hooks) != 1:
                return False
            best = min((v for v in comp if v in adj[c]), key=h.vkey)
            if hooks[0] != best:
                return False
            if not rec(comp, frozenset(e for e in inner if e.tail in comp)):
                return False
        return True

    return rec(sel.vertices, es)


def decompose_by_height(g: GainGraph) -> dict[HeightFunction, int]:
    """NBC-tree count of each g[h], over the coherent height functions h."""
    out = {}
    for h in iter_coherent_heights(g):
        sel = select_coherent_subgraph(g, h)
        out[h] = len(enumerate_nbc_trees(sel, h))
    return out


def count_trees_by(trees: Iterable[NbcTree], attr: str) -> Counter:
    return Counter(getattr(t, attr) for t in trees)


def forest_components(vertices: Iterable[int], edges: Iterable[GainEdge]) -> list[NbcTree]:
    """Split a forest into its component trees (isolated vertices included)."""
    es = list(edges)
    out = []
    for comp in components(vertices, es):
        out.append(NbcTree(comp, frozenset(e for e in es if e.tail in comp)))
    return out
