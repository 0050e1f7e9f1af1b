"""Constructive maps between NBC trees of interval gain graphs and plane trees.

Corner-keyed maps (root of the tree = corner of the NBC tree, heights kept):

* ``llks_to_nbc`` / ``nbc_to_llks``: LL(arity)S  <->  NBC trees of K^{[3-arity, arity-1]}
* ``sllks_to_nbc`` / ``nbc_to_sllks``: SLL(arity)S <-> NBC trees of K^{[1, arity-1]}

At arity 2 both are the Linial map, which is also available in its original
subcorner-based wording as ``llbs_to_nbc``.  The Linial graph has two more
correspondences keyed by subcorners (``nbc_to_rlbs`` and
``nbc_to_llbs_by_subcorners``).  Forests are handled through the root chain
of the LkS (``lks_to_nbc_forest``).

The corner-keyed construction in one paragraph: map every piece of the left
decomposition recursively.  Pieces are taken by decreasing O_h order of their
corners; the first one (corner ``p``) is joined to the root.  Each later piece
joins the root through its O_h-smallest vertex adjacent to the root when that
vertex beats ``p``; otherwise it is grafted onto the growing component of
``p`` at the O_h-smallest vertex adjacent to its corner.  The inverse cuts
that component by a depth-first walk from ``p`` whenever it steps to a vertex
O_h-smaller than the corner of the current piece.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gaingraph import GainEdge, GainGraph, components, interval_gain_graph_on
from .heights import HeightFunction, corner
from .nbc import NbcTree, forest_components, is_nbc_tree
from .trees import (
    PlaneTree,
    assemble_left,
    graft,
    is_llbs,
    is_llks,
    is_rlbs,
    is_sllks,
    join_chain,
    left_decomposition,
    lks_from_pieces,
    lks_pieces,
    llks_height,
    right_chain_pieces,
)


@dataclass
class BijectionTrace:
    special_vertex: int | None = None
    direct_attachments: list[tuple[int, GainEdge]] = field(default_factory=list)
    subcorner_attachments: list[tuple[int, int, GainEdge]] = field(default_factory=list)
    chained_attachments: list[tuple[int, GainEdge]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "special_vertex": self.special_vertex,
            "direct_attachments": [
                {"piece_root": r, "edge": _edge_json(e)} for r, e in self.direct_attachments
            ],
            "subcorner_attachments": [
                {"piece_root": r, "via": x, "edge": _edge_json(e)} for r, x, e in self.subcorner_attachments
            ],
            "chained_attachments": [
                {"piece_corner": r, "edge": _edge_json(e)} for r, e in self.chained_attachments
            ],
        }


def _edge_json(e: GainEdge) -> dict:
    return {"i": e.tail, "j": e.head, "g": e.gain}


def gain_interval(family: str, arity: int) -> tuple[int, int]:
    """Gain interval [a, b] matched with a tree family at a given arity."""
    if arity < 2:
        raise ValueError("arity must be at least 2")
    if family == "llks":
        return (3 - arity, arity - 1)
    if family == "sllks":
        return (1, arity - 1)
    raise ValueError(f"unknown family {family!r}")


def _adjacent(h: HeightFunction, u: int, v: int, a: int, b: int) -> bool:
    i, j = (u, v) if u < v else (v, u)
    return a <= h[j] - h[i] <= b


def _coherent_edge(h: HeightFunction, u: int, v: int) -> GainEdge:
    i, j = (u, v) if u < v else (v, u)
    return GainEdge(i, j, h[j] - h[i])


# --- corner-keyed, general arity ----------------------------------------------


def _ll_to_nbc(t: PlaneTree, h: HeightFunction, a: int, b: int, trace: BijectionTrace | None = None) -> NbcTree:
    r = t.root
    pieces = [p for ps in left_decomposition(t).values() for p in ps]
    if not pieces:
        return NbcTree.single(r)
    images = sorted((_ll_to_nbc(p, h, a, b) for p in pieces), key=lambda n: h.vkey(n.corner), reverse=True)
    first = images[0]
    p = first.corner
    if not _adjacent(h, r, p, a, b):
        raise ValueError(f"piece corner {p} cannot be joined to root {r}")
    edges = set(first.edges) | {_coherent_edge(h, r, p)}
    grown = set(first.vertices)
    if trace is not None:
        trace.special_vertex = p
        trace.direct_attachments.append((p, _coherent_edge(h, r, p)))
    for img in images[1:]:
        edges |= img.edges
        near = [v for v in img.vertices if _adjacent(h, r, v, a, b)]
        x = min(near, key=h.vkey) if near else None
        if x is not None and h.less(x, p):
            e = _coherent_edge(h, r, x)
            if trace is not None:
                if x == img.corner:
                    trace.direct_attachments.append((img.corner, e))
                else:
                    trace.subcorner_attachments.append((img.corner, x, e))
        else:
            hooks = [u for u in grown if _adjacent(h, u, img.corner, a, b)]
            if not hooks:
                raise ValueError(f"piece with corner {img.corner} has nowhere to attach")
            e = _coherent_edge(h, min(hooks, key=h.vkey), img.corner)
            grown |= img.vertices
            if trace is not None:
                trace.chained_attachments.append((img.corner, e))
        edges.add(e)
    return NbcTree(t.labels, frozenset(edges))


def _cut_pieces(nt: NbcTree, h: HeightFunction, start: int, allowed: frozenset[int]) -> list[tuple[frozenset[int], frozenset[GainEdge]]]:
    """Depth-first from ``start`` inside ``allowed``; a step to a vertex that is
    O_h-smaller than the current piece's corner opens a new piece."""
    adj: dict[int, list[GainEdge]] = {v: [] for v in allowed}
    for e in nt.edges:
        if e.tail in allowed and e.head in allowed:
            adj[e.tail].append(e)
            adj[e.head].append(e)
    piece_of = {start: start}
    members: dict[int, set[int]] = {start: {start}}
    kept: dict[int, set[GainEdge]] = {start: set()}
    stack = [start]
    while stack:
        u = stack.pop()
        top = piece_of[u]
        for e in sorted(adj[u]):
            w = e.other(u)
            if w in piece_of:
                continue
            if h.less(w, top):
                piece_of[w] = w
                members[w] = {w}
                kept[w] = set()
            else:
                piece_of[w] = top
                members[top].add(w)
                kept[top].add(e)
            stack.append(w)
    return [(frozenset(members[c]), frozenset(kept[c])) for c in members]


def _nbc_to_ll(nt: NbcTree, h: HeightFunction, arity: int) -> PlaneTree:
    r = corner(h, nt.vertices)
    if len(nt.vertices) == 1:
        return PlaneTree.single(r, arity)
    nbrs = nt.neighbours(r)
    p = max(nbrs, key=h.vkey)
    rest = [e for e in nt.edges if r not in e.ends]
    parts: list[tuple[frozenset[int], frozenset[GainEdge]]] = []
    for comp in components(nt.vertices - {r}, rest):
        ces = frozenset(e for e in rest if e.tail in comp)
        if p in comp:
            parts.extend(_cut_pieces(NbcTree(comp, ces), h, p, comp))
        else:
            parts.append((comp, ces))
    slots: dict[int, list[PlaneTree]] = {}
    for vs, es in parts:
        c = corner(h, vs)
        drop = h[r] - h[c]
        slot = arity - drop if c < r else arity - 1 - drop
        if not 1 <= slot < arity:
            raise ValueError(f"piece with corner {c} sits at an impossible level")
        slots.setdefault(slot, []).append(_nbc_to_ll(NbcTree(vs, es), h, arity))
    return assemble_left(r, arity, slots)


def llks_to_nbc(t: PlaneTree, arity: int | None = None, trace: BijectionTrace | None = None) -> NbcTree:
    """LL(arity)S -> NBC tree of K^{[3-arity, arity-1]} with the same height and corner = root."""
    k = t.arity if arity is None else arity
    if not is_llks(t, k):
        raise ValueError("input is not a left local k-ary search tree")
    a, b = gain_interval("llks", k)
    return _ll_to_nbc(t, llks_height(t, k), a, b, trace)


def sllks_to_nbc(t: PlaneTree, arity: int | None = None, trace: BijectionTrace | None = None) -> NbcTree:
    """SLL(arity)S -> NBC tree of K^{[1, arity-1]} with the same height and corner = root."""
    k = t.arity if arity is None else arity
    if not is_sllks(t, k):
        raise ValueError("input is not a semi-local left k-ary search tree")
    a, b = gain_interval("sllks", k)
    return _ll_to_nbc(t, llks_height(t, k), a, b, trace)


def _check_nbc(nt: NbcTree, a: int, b: int) -> None:
    if not is_nbc_tree(nt, interval_gain_graph_on(nt.vertices, a, b)):
        raise ValueError(f"not an NBC tree of K^[{a},{b}]: {nt}")


def nbc_to_llks(nt: NbcTree, arity: int, check: bool = True) -> PlaneTree:
    a, b = gain_interval("llks", arity)
    if check:
        _check_nbc(nt, a, b)
    out = _nbc_to_ll(nt, nt.height, arity)
    if check and not is_llks(out, arity):
        raise ValueError("reconstruction is not an LLkS")
    return out


def nbc_to_sllks(nt: NbcTree, arity: int, check: bool = True) -> PlaneTree:
    a, b = gain_interval("sllks", arity)
    if check:
        _check_nbc(nt, a, b)
    out = _nbc_to_ll(nt, nt.height, arity)
    if check and not is_sllks(out, arity):
        raise ValueError("reconstruction is not an SLLkS")
    return out


# --- Linial, corner-keyed, original wording ------------------------------------


def _linial(u: int, v: int) -> GainEdge:
    return GainEdge(min(u, v), max(u, v), 1)


def llbs_to_nbc(t: PlaneTree) -> NbcTree:
    """LLBS -> NBC tree of the Linial graph.

    Pieces with root at most p (the largest chain root below the root) hang
    from the root; a later piece hangs from the root by its subcorner when
    that subcorner is below p, and otherwise its corner hangs from p.
    """
    if not is_llbs(t):
        raise ValueError("input is not a left local binary search tree")
    return _llbs_to_nbc(t)


def _llbs_to_nbc(t: PlaneTree) -> NbcTree:
    r = t.root
    chain = left_decomposition(t).get(1, [])
    if not chain:
        return NbcTree.single(r)
    images = [_llbs_to_nbc(piece) for piece in chain]
    p = max(piece.root for piece in chain if piece.root < r)
    edges = set()
    for piece, img in zip(chain, images):
        edges |= img.edges
        if piece.root <= p:
            edges.add(_linial(r, piece.root))
        elif img.subcorner < p:
            edges.add(_linial(r, img.subcorner))
        else:
            edges.add(_linial(p, piece.root))
    return NbcTree(t.labels, frozenset(edges))


def nbc_to_llbs(nt: NbcTree, check: bool = True) -> PlaneTree:
    """Inverse of :func:`llbs_to_nbc`."""
    return nbc_to_llks(nt, 2, check=check)


# --- forests -------------------------------------------------------------------


def lks_to_nbc_forest(t: PlaneTree, family: str = "llks") -> GainGraph:
    """Cut the root's last-slot chain; map each left piece to an NBC tree."""
    to_nbc = {"llks": llks_to_nbc, "sllks": sllks_to_nbc}[family]
    edges: set[GainEdge] = set()
    for piece in lks_pieces(t):
        edges |= to_nbc(piece, t.arity).edges
    return GainGraph(t.labels, frozenset(edges))


def nbc_forest_to_lks(forest: GainGraph, arity: int, family: str = "llks", check: bool = True) -> PlaneTree:
    back = {"llks": nbc_to_llks, "sllks": nbc_to_sllks}[family]
    pieces = [back(comp, arity, check=check) for comp in forest_components(forest.vertices, forest.edges)]
    return lks_from_pieces(pieces)


def lbs_to_nbc_forest(t: PlaneTree) -> GainGraph:
    return lks_to_nbc_forest(t, "llks")


def nbc_forest_to_lbs(forest: GainGraph, check: bool = True) -> PlaneTree:
    return nbc_forest_to_lks(forest, 2, "llks", check=check)


def is_nbc_forest(forest: GainGraph, a: int, b: int) -> bool:
    """Every component is an NBC tree of K^{[a,b]}[h] under its own O_h."""
    return all(
        is_nbc_tree(comp, interval_gain_graph_on(comp.vertices, a, b))
        for comp in forest_components(forest.vertices, forest.edges)
    )


# --- Linial, subcorner-keyed ---------------------------------------------------


def _split_at(nt: NbcTree, v: int) -> list[NbcTree]:
    rest = [e for e in nt.edges if v not in e.ends]
    return forest_components(nt.vertices - {v}, rest)


def nbc_to_rlbs(nt: NbcTree) -> PlaneTree:
    """NBC tree of the Linial graph -> RLBS rooted at its subcorner."""
    if len(nt.vertices) == 1:
        return PlaneTree.single(min(nt.vertices))
    sc = nt.subcorner
    subs = sorted((nbc_to_rlbs(part) for part in _split_at(nt, sc)), key=lambda r: r.root, reverse=True)
    if subs[0].root < sc:
        raise ValueError(f"no piece has a subcorner above {sc}")
    return graft(PlaneTree.single(sc), sc, 2, join_chain(subs, 1))


def rlbs_to_nbc(t: PlaneTree) -> NbcTree:
    if not is_rlbs(t):
        raise ValueError("input is not a right local binary search tree")
    return _rlbs_to_nbc(t)


def _rlbs_to_nbc(t: PlaneTree) -> NbcTree:
    sc = t.root
    edges: set[GainEdge] = set()
    for piece in right_chain_pieces(t, 2):
        img = _rlbs_to_nbc(piece)
        edges |= img.edges
        c_i, sc_i = img.corner, piece.root
        if sc_i > sc or sc > c_i:
            edges.add(_linial(sc, c_i))
        else:
            edges.add(_linial(sc, sc_i))
    return NbcTree(t.labels, frozenset(edges))


def nbc_to_llbs_by_subcorners(nt: NbcTree) -> PlaneTree:
    """Corner becomes the root; the pieces left after deleting it become RLBS
    keyed by their subcorners and hang in a descending slot-1 chain."""
    c = nt.corner
    if len(nt.vertices) == 1:
        return PlaneTree.single(c)
    subs = sorted((nbc_to_rlbs(part) for part in _split_at(nt, c)), key=lambda r: r.root, reverse=True)
    if subs[0].root > c:
        raise ValueError(f"a piece has subcorner above the corner {c}")
    return graft(PlaneTree.single(c), c, 1, join_chain(subs, 1))


def llbs_by_subcorners_to_nbc(t: PlaneTree) -> NbcTree:
    if not is_llbs(t):
        raise ValueError("input is not a left local binary search tree")
    c = t.root
    edges: set[GainEdge] = set()
    for piece in right_chain_pieces(t, 1):
        img = rlbs_to_nbc(piece)
        edges |= img.edges
        edges.add(_linial(c, img.corner) if c > img.corner else _linial(c, piece.root))
    return NbcTree(t.labels, frozenset(edges))


# --- registry used by the CLI and verification ---------------------------------

MAPS = {
    ("llbs", "nbc"): lambda t, k: llbs_to_nbc(t),
    ("nbc", "llbs"): lambda n, k: nbc_to_llbs(n),
    ("llks", "nbc"): lambda t, k: llks_to_nbc(t, k),
    ("nbc", "llks"): lambda n, k: nbc_to_llks(n, k),
    ("sllks", "nbc"): lambda t, k: sllks_to_nbc(t, k),
    ("nbc", "sllks"): lambda n, k: nbc_to_sllks(n, k),
    ("rlbs", "nbc"): lambda t, k: rlbs_to_nbc(t),
    ("nbc", "rlbs"): lambda n, k: nbc_to_rlbs(n),
    ("llbs-sc", "nbc"): lambda t, k: llbs_by_subcorners_to_nbc(t),
    ("nbc", "llbs-sc"): lambda n, k: nbc_to_llbs_by_subcorners(n),
}

