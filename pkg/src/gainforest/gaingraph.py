"""Integral gain graphs with interval gains.

Edges are stored canonically (tail < head).  A gain graph is a finite vertex
set of positive integers plus a set of canonical edges; parallel edges are
allowed only when their gains differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class GainEdge:
    """The oriented edge ``gain(tail, head)``; reads as x_head - x_tail = gain."""

    tail: int
    head: int
    gain: int

    def __post_init__(self) -> None:
        if self.tail == self.head:
            raise ValueError(f"loop at vertex {self.tail}")

    def reorient(self) -> GainEdge:
        return GainEdge(self.head, self.tail, -self.gain)

    def canonical(self) -> GainEdge:
        return self if self.tail < self.head else self.reorient()

    @property
    def ends(self) -> tuple[int, int]:
        return (self.tail, self.head)

    def other(self, v: int) -> int:
        if v == self.tail:
            return self.head
        if v == self.head:
            return self.tail
        raise ValueError(f"{v} is not an endpoint of {self}")

    def oriented_from(self, v: int) -> GainEdge:
        """Same edge, oriented so that it leaves ``v``."""
        if v == self.tail:
            return self
        if v == self.head:
            return self.reorient()
        raise ValueError(f"{v} is not an endpoint of {self}")

    def __str__(self) -> str:
        return f"{self.gain}({self.tail},{self.head})"


def reorient(e: GainEdge) -> GainEdge:
    return e.reorient()


def edge(tail: int, head: int, gain: int) -> GainEdge:
    """Canonical edge constructor."""
    return GainEdge(tail, head, gain).canonical()


@dataclass(frozen=True)
class GainGraph:
    vertices: frozenset[int]
    edges: frozenset[GainEdge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        vs = frozenset(self.vertices)
        es = frozenset(e.canonical() for e in self.edges)
        for e in es:
            if e.tail not in vs or e.head not in vs:
                raise ValueError(f"edge {e} has an endpoint outside {sorted(vs)}")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def sorted_edges(self) -> list[GainEdge]:
        return sorted(self.edges)

    def restrict(self, vertices: Iterable[int]) -> GainGraph:
        vs = frozenset(vertices)
        return GainGraph(vs, frozenset(e for e in self.edges if e.tail in vs and e.head in vs))

    def with_edges(self, edges: Iterable[GainEdge]) -> GainGraph:
        return GainGraph(self.vertices, frozenset(edges))

    def adjacency(self) -> dict[int, list[GainEdge]]:
        adj: dict[int, list[GainEdge]] = {v: [] for v in self.vertices}
        for e in self.sorted_edges():
            adj[e.tail].append(e)
            adj[e.head].append(e)
        return adj

    def max_abs_gain(self) -> int:
        return max((abs(e.gain) for e in self.edges), default=0)

    def is_connected(self) -> bool:
        return len(components(self.vertices, self.edges)) <= 1


def make_interval_gain_graph(n: int, a: int, b: int) -> GainGraph:
    """K_n^{ab}: every pair i < j carries one edge for each gain in [a, b]."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if a > b:
        raise ValueError(f"empty gain interval [{a}, {b}]")
    vs = frozenset(range(1, n + 1))
    es = frozenset(
        GainEdge(i, j, g) for i in range(1, n + 1) for j in range(i + 1, n + 1) for g in range(a, b + 1)
    )
    return GainGraph(vs, es)


def interval_gain_graph_on(vertices: Iterable[int], a: int, b: int) -> GainGraph:
    vs = sorted(set(vertices))
    es = frozenset(GainEdge(i, j, g) for x, i in enumerate(vs) for j in vs[x + 1 :] for g in range(a, b + 1))
    return GainGraph(frozenset(vs), es)


def braid(n: int) -> GainGraph:
    return make_interval_gain_graph(n, 0, 0)


def linial(n: int) -> GainGraph:
    return make_interval_gain_graph(n, 1, 1)


def shi(n: int) -> GainGraph:
    return make_interval_gain_graph(n, 0, 1)


def catalan(n: int) -> GainGraph:
    return make_interval_gain_graph(n, -1, 1)


def components(vertices: Iterable[int], edges: Iterable[GainEdge]) -> list[frozenset[int]]:
    """Connected components, sorted by smallest vertex."""
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        ra, rb = find(e.tail), find(e.head)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, set[int]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def is_forest(vertices: Iterable[int], edges: Iterable[GainEdge]) -> bool:
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        ra, rb = find(e.tail), find(e.head)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def is_spanning_tree(vertices: Iterable[int], edges: Iterable[GainEdge]) -> bool:
    vs = frozenset(vertices)
    es = list(edges)
    return len(es) == len(vs) - 1 and is_forest(vs, es)


# --- circles -----------------------------------------------------------------


@dataclass(frozen=True)
class Circle:
    """A closed walk ``edges[0] edges[1] ...`` visiting each vertex once."""

    edges: tuple[GainEdge, ...]

    def __post_init__(self) -> None:
        es = self.edges
        if len(es) < 2:
            raise ValueError("a circle needs at least two edges")
        for e, f in zip(es, es[1:] + es[:1]):
            if e.head != f.tail:
                raise ValueError(f"edges {e} and {f} are not consecutively oriented")
        if len({e.tail for e in es}) != len(es):
            raise ValueError("circle revisits a vertex")
        if len({e.canonical() for e in es}) != len(es):
            raise ValueError("circle reuses an edge")

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(e.tail for e in self.edges)

    def edge_set(self) -> frozenset[GainEdge]:
        return frozenset(e.canonical() for e in self.edges)

    def reversed(self) -> Circle:
        return Circle(tuple(e.reorient() for e in reversed(self.edges)))

    def canonical(self) -> Circle:
        """Start at the smallest vertex, heading to its smaller circle neighbour."""
        es = self.edges
        start = min(range(len(es)), key=lambda x: es[x].tail)
        rot = es[start:] + es[:start]
        if len(rot) > 2 and rot[-1].tail < rot[0].head:
            rot = Circle(rot).reversed().edges
            start = min(range(len(rot)), key=lambda x: rot[x].tail)
            rot = rot[start:] + rot[:start]
        elif len(rot) == 2:
            # digon: both directions share vertices; lead with the smaller gain leaving the start
            a, b = rot[0], rot[1].reorient()
            if b.gain < a.gain:
                rot = (b, a.reorient())
        return Circle(rot)


def circle_gain(c: Circle | Iterable[GainEdge]) -> int:
    if not isinstance(c, Circle):
        c = Circle(tuple(c))
    return sum(e.gain for e in c.edges)


def _vertex_cycles(vertices: list[int], nbrs: dict[int, set[int]]) -> Iterator[tuple[int, ...]]:
    """Cycles (length >= 3) of a simple graph, each once, starting at its minimum."""
    for s in vertices:
        stack: list[tuple[int, ...]] = [(s,)]
        while stack:
            path = stack.pop()
            last = path[-1]
            for w in sorted(nbrs[last], reverse=True):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield path
                elif w > s and w not in path:
                    stack.append(path + (w,))


def enumerate_circles(g: GainGraph) -> list[Circle]:
    """Every circle of ``g`` (digons included), canonical and deduplicated."""
    by_pair: dict[tuple[int, int], list[GainEdge]] = {}
    for e in g.sorted_edges():
        by_pair.setdefault(e.ends, []).append(e)
    nbrs: dict[int, set[int]] = {v: set() for v in g.vertices}
    for i, j in by_pair:
        nbrs[i].add(j)
        nbrs[j].add(i)

    out: set[Circle] = set()
    for (i, j), par in by_pair.items():
        for x in range(len(par)):
            for y in range(x + 1, len(par)):
                out.add(Circle((par[x], par[y].reorient())).canonical())
    for cyc in _vertex_cycles(sorted(g.vertices), nbrs):
        steps = list(zip(cyc, cyc[1:] + cyc[:1]))
        choices = [by_pair[(min(u, v), max(u, v))] for u, v in steps]
        for pick in product(*choices):
            es = tuple(e.oriented_from(u) for e, (u, _) in zip(pick, steps))
            out.add(Circle(es).canonical())
    return sorted(out, key=_circle_sort_key)


def _circle_sort_key(c: Circle) -> tuple:
    return (len(c.edges), tuple((e.tail, e.head, e.gain) for e in c.edges))


def enumerate_balanced_circles(g: GainGraph) -> list[Circle]:
    return [c for c in enumerate_circles(g) if circle_gain(c) == 0]


def is_balanced(s: Iterable[GainEdge], g: GainGraph | None = None) -> bool:
    """True iff every circle inside the edge set ``s`` has gain zero.

    Checked by trying to assign potentials consistently, which needs no
    circle enumeration.  ``g`` only supplies the vertex set when given.
    """
    es = [e.canonical() for e in s]
    vs = set(g.vertices) if g is not None else set()
    for e in es:
        vs.update(e.ends)
    pot: dict[int, int] = {}
    adj: dict[int, list[GainEdge]] = {v: [] for v in vs}
    for e in es:
        adj[e.tail].append(e)
        adj[e.head].append(e)
    for root in sorted(vs):
        if root in pot:
            continue
        pot[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for e in adj[u]:
                f = e.oriented_from(u)
                want = pot[u] + f.gain
                if f.head in pot:
                    if pot[f.head] != want:
                        return False
                else:
                    pot[f.head] = want
                    stack.append(f.head)
    return True
