"""Height functions, the induced order O_h, corners and selected subgraphs."""

from __future__ import annotations

from collections.abc import Mapping
from itertools import product
from typing import Iterable, Iterator

from .gaingraph import GainEdge, GainGraph, components


class HeightFunction(Mapping):
    """Immutable vertex -> level map, always stored shifted so min level is 0."""

    __slots__ = ("_levels", "_hash")

    def __init__(self, levels: Mapping[int, int] | Iterable[tuple[int, int]]):
        items = dict(levels)
        if not items:
            raise ValueError("height function on an empty vertex set")
        low = min(items.values())
        self._levels = {v: items[v] - low for v in sorted(items)}
        self._hash = hash(tuple(self._levels.items()))

    @classmethod
    def from_vector(cls, vertices: Iterable[int], levels: Iterable[int]) -> HeightFunction:
        return cls(zip(sorted(vertices), levels))

    def __getitem__(self, v: int) -> int:
        return self._levels[v]

    def __iter__(self):
        return iter(self._levels)

    def __len__(self) -> int:
        return len(self._levels)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HeightFunction):
            return self._levels == other._levels
        return NotImplemented

    def __repr__(self) -> str:
        return f"HeightFunction({self._levels})"

    def vector(self) -> tuple[int, ...]:
        return tuple(self._levels.values())

    def restrict(self, vertices: Iterable[int]) -> HeightFunction:
        return HeightFunction({v: self._levels[v] for v in vertices})

    # O_h: higher level first, then smaller label
    def vkey(self, v: int) -> tuple[int, int]:
        return (-self._levels[v], v)

    def ekey(self, e: GainEdge) -> tuple:
        a, b = sorted(e.ends, key=self.vkey)
        return (self.vkey(a), self.vkey(b), e.gain)

    def less(self, u: int, v: int) -> bool:
        return self.vkey(u) < self.vkey(v)

    def coherent(self, e: GainEdge) -> bool:
        return self._levels[e.head] - self._levels[e.tail] == e.gain

    def to_json(self) -> dict[str, int]:
        return {str(v): lv for v, lv in self._levels.items()}


def parse_height(text: str) -> HeightFunction:
    """Parse ``"1:0,2:1,3:1"``."""
    pairs = []
    for chunk in text.split(","):
        v, _, lv = chunk.strip().partition(":")
        if not _:
            raise ValueError(f"bad height entry {chunk!r}")
        pairs.append((int(v), int(lv)))
    return HeightFunction(pairs)


def corner(h: HeightFunction, vertices: Iterable[int] | None = None) -> int:
    vs = list(h if vertices is None else vertices)
    if not vs:
        raise ValueError("corner of an empty vertex set")
    return min(vs, key=h.vkey)


def select_coherent_subgraph(g: GainGraph, h: HeightFunction) -> GainGraph:
    """Phi[h]: the edges of ``g`` whose gain equals the level difference."""
    return g.with_edges(e for e in g.edges if h.coherent(e))


def height_from_balanced(g: GainGraph | Iterable[GainEdge], vertices: Iterable[int] | None = None) -> HeightFunction:
    """The unique normalized h with h(head) - h(tail) = gain on every edge."""
    if isinstance(g, GainGraph):
        vs, es = set(g.vertices), list(g.edges)
    else:
        es = list(g)
        vs = set(vertices) if vertices is not None else {v for e in es for v in e.ends}
    if not vs:
        raise ValueError("empty graph")
    adj: dict[int, list[GainEdge]] = {v: [] for v in vs}
    for e in es:
        adj[e.tail].append(e)
        adj[e.head].append(e)
    start = min(vs)
    lv = {start: 0}
    stack = [start]
    while stack:
        u = stack.pop()
        for e in adj[u]:
            f = e.oriented_from(u)
            want = lv[u] + f.gain
            if f.head in lv:
                if lv[f.head] != want:
                    raise ValueError("unbalanced: edge constraints are inconsistent")
            else:
                lv[f.head] = want
                stack.append(f.head)
    if len(lv) != len(vs):
        raise ValueError("disconnected graph has no unique height function")
    return HeightFunction(lv)


def subcorner(h: HeightFunction, sel: GainGraph) -> int:
    """O_h-smallest neighbour of the corner in ``sel`` (the corner itself if |V| = 1)."""
    c = corner(h, sel.vertices)
    if sel.n == 1:
        return c
    nbrs = [e.other(c) for e in sel.edges if c in e.ends]
    if not nbrs:
        raise ValueError(f"corner {c} is isolated")
    return min(nbrs, key=h.vkey)


def enumerate_coherent_heights(g: GainGraph) -> list[HeightFunction]:
    """All h with min level 0 whose selected subgraph Phi[h] is connected."""
    return list(iter_coherent_heights(g))


def iter_coherent_heights(g: GainGraph) -> Iterator[HeightFunction]:
    vs = sorted(g.vertices)
    bound = (len(vs) - 1) * g.max_abs_gain()
    for levels in product(range(bound + 1), repeat=len(vs)):
        if 0 not in levels:
            continue
        h = HeightFunction(zip(vs, levels))
        sel = select_coherent_subgraph(g, h)
        if len(components(sel.vertices, sel.edges)) == 1:
            yield h
