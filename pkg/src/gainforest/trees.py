"""Labelled plane k-ary trees (LBS, LkS, SLkS and their left variants) and
coloured rooted labelled trees.

Slots are numbered 1..arity.  Only slot 1 and slot ``arity`` carry an order
constraint: slot-1 child < parent < slot-arity child.  For the semi-local
family the constraint moves from slot 1 to the lowest occupied inner slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping

from .heights import HeightFunction


@dataclass(frozen=True)
class PlaneTree:
    arity: int
    root: int
    links: frozenset[tuple[int, int, int]]  # (node, slot, child)

    def __post_init__(self) -> None:
        object.__setattr__(self, "links", frozenset(self.links))
        if self.arity < 2:
            raise ValueError("arity must be at least 2")
        seen_child = set()
        seen_slot = set()
        for node, slot, child in self.links:
            if not 1 <= slot <= self.arity:
                raise ValueError(f"slot {slot} out of range for arity {self.arity}")
            if child in seen_child or child == self.root:
                raise ValueError(f"vertex {child} has two parents")
            if (node, slot) in seen_slot:
                raise ValueError(f"slot {slot} of {node} used twice")
            seen_child.add(child)
            seen_slot.add((node, slot))
        if len(self.labels) != len(self.links) + 1:
            raise ValueError("links do not form a tree hanging from the root")

    @classmethod
    def single(cls, v: int, arity: int = 2) -> PlaneTree:
        return cls(arity, v, frozenset())

    @classmethod
    def build(cls, arity: int, root: int, slots: Mapping[tuple[int, int], int]) -> PlaneTree:
        """``slots`` maps (node, slot) -> child."""
        return cls(arity, root, frozenset((n, s, c) for (n, s), c in slots.items()))

    @cached_property
    def _kids(self) -> dict[int, dict[int, int]]:
        kids: dict[int, dict[int, int]] = {}
        for node, slot, child in self.links:
            kids.setdefault(node, {})[slot] = child
        return kids

    @cached_property
    def labels(self) -> frozenset[int]:
        out = {self.root}
        stack = [self.root]
        kids = self._kids
        while stack:
            for c in kids.get(stack.pop(), {}).values():
                if c not in out:
                    out.add(c)
                    stack.append(c)
        return frozenset(out)

    def children(self, node: int) -> dict[int, int]:
        return dict(sorted(self._kids.get(node, {}).items()))

    def child(self, node: int, slot: int) -> int | None:
        return self._kids.get(node, {}).get(slot)

    def subtree(self, v: int) -> PlaneTree:
        keep = []
        stack = [v]
        while stack:
            u = stack.pop()
            for s, c in self._kids.get(u, {}).items():
                keep.append((u, s, c))
                stack.append(c)
        return PlaneTree(self.arity, v, frozenset(keep))

    def cut(self, node: int, slot: int) -> tuple[PlaneTree, PlaneTree | None]:
        """Remove the link at (node, slot); returns (rest, detached subtree)."""
        c = self.child(node, slot)
        if c is None:
            return self, None
        below = self.subtree(c)
        drop = below.links | {(node, slot, c)}
        return PlaneTree(self.arity, self.root, self.links - drop), below

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "root": self.root,
            "children": [{"node": n, "slot": s, "child": c} for n, s, c in sorted(self.links)],
        }

    def __str__(self) -> str:
        def show(v: int) -> str:
            kids = self.children(v)
            if not kids:
                return str(v)
            return f"{v}(" + " ".join(f"{s}:{show(c)}" for s, c in kids.items()) + ")"

        return show(self.root)


def graft(parent: PlaneTree, node: int, slot: int, sub: PlaneTree) -> PlaneTree:
    if parent.child(node, slot) is not None:
        raise ValueError(f"slot {slot} of {node} is occupied")
    return PlaneTree(parent.arity, parent.root, parent.links | sub.links | {(node, slot, sub.root)})


# --- predicates ---------------------------------------------------------------


def _lks_node_ok(v: int, kids: Mapping[int, int], arity: int) -> bool:
    first, last = kids.get(1), kids.get(arity)
    return (first is None or first < v) and (last is None or last > v)


def _slks_node_ok(v: int, kids: Mapping[int, int], arity: int) -> bool:
    last = kids.get(arity)
    if last is not None and last < v:
        return False
    inner = [s for s in kids if s < arity]
    return not inner or kids[min(inner)] < v


def is_lks(t: PlaneTree, arity: int | None = None) -> bool:
    k = t.arity if arity is None else arity
    if t.arity != k:
        return False
    return all(_lks_node_ok(v, t.children(v), k) for v in t.labels)


def is_slks(t: PlaneTree, arity: int | None = None) -> bool:
    k = t.arity if arity is None else arity
    if t.arity != k:
        return False
    return all(_slks_node_ok(v, t.children(v), k) for v in t.labels)


def is_lbs(t: PlaneTree) -> bool:
    return is_lks(t, 2)


def is_llks(t: PlaneTree, arity: int | None = None) -> bool:
    return is_lks(t, arity) and t.child(t.root, t.arity) is None


def is_sllks(t: PlaneTree, arity: int | None = None) -> bool:
    return is_slks(t, arity) and t.child(t.root, t.arity) is None


def is_llbs(t: PlaneTree) -> bool:
    return is_llks(t, 2)


def is_rlbs(t: PlaneTree) -> bool:
    return is_lbs(t) and t.child(t.root, 1) is None


# --- decompositions -----------------------------------------------------------


def split_chain(t: PlaneTree, start: int | None, slot: int) -> list[PlaneTree]:
    """Follow ``slot`` links from ``start``, cutting each; returns the pieces in
    chain order, each rooted at a chain vertex."""
    pieces = []
    v = start
    while v is not None:
        sub = t.subtree(v)
        nxt = sub.child(v, slot)
        rest, _ = sub.cut(v, slot)
        pieces.append(rest)
        v = nxt
    return pieces


def join_chain(pieces: list[PlaneTree], slot: int) -> PlaneTree:
    """Inverse of :func:`split_chain`: hang each piece in ``slot`` of the previous root."""
    out = pieces[-1]
    for p in reversed(pieces[:-1]):
        out = graft(p, p.root, slot, out)
    return out


def left_decomposition(t: PlaneTree) -> dict[int, list[PlaneTree]]:
    """Per inner slot i, the left-variant pieces cut from the slot-i chain of an
    LL tree (chain links are slot-``arity`` links, so roots increase)."""
    k = t.arity
    if t.child(t.root, k) is not None:
        raise ValueError("left decomposition needs an empty last slot at the root")
    return {i: split_chain(t, t.child(t.root, i), k) for i in range(1, k) if t.child(t.root, i) is not None}


def assemble_left(root: int, arity: int, pieces: Mapping[int, Iterable[PlaneTree]]) -> PlaneTree:
    """Rebuild an LL tree from a root and per-slot pieces (any order)."""
    out = PlaneTree.single(root, arity)
    for slot in sorted(pieces):
        ps = sorted(pieces[slot], key=lambda p: p.root)
        if not ps:
            continue
        if not 1 <= slot < arity:
            raise ValueError(f"slot {slot} is not an inner slot")
        out = graft(out, root, slot, join_chain(ps, arity))
    return out


def lks_pieces(t: PlaneTree) -> list[PlaneTree]:
    """Split an LkS along the root's last-slot chain into LL pieces, roots increasing."""
    return split_chain(t, t.root, t.arity)


def lks_from_pieces(pieces: Iterable[PlaneTree]) -> PlaneTree:
    ps = sorted(pieces, key=lambda p: p.root)
    return join_chain(ps, ps[0].arity)


def right_chain_pieces(t: PlaneTree, slot: int) -> list[PlaneTree]:
    """Binary trees: cut the slot-1 chain that starts at the root's ``slot`` child.
    Gives RLBS pieces with decreasing roots."""
    return split_chain(t, t.child(t.root, slot), 1)


def llks_height(t: PlaneTree, arity: int | None = None) -> HeightFunction:
    """Recursive height of an LL tree; the root ends up as the corner.

    A slot-i piece whose root is below (resp. above) its parent root sits
    ``arity - i`` (resp. ``arity - i - 1``) levels lower.
    """
    k = t.arity if arity is None else arity
    if t.child(t.root, k) is not None:
        raise ValueError("not a left tree")
    lv: dict[int, int] = {}

    def place(tree: PlaneTree, base: int) -> None:
        lv[tree.root] = base
        for slot, pieces in left_decomposition(tree).items():
            for p in pieces:
                drop = k - slot if p.root < tree.root else k - slot - 1
                place(p, base - drop)

    place(t, 0)
    return HeightFunction(lv)


# --- enumeration --------------------------------------------------------------

NodeRule = Callable[[int, Mapping[int, int], int], bool]

FAMILY_RULES: dict[str, tuple[NodeRule | None, bool]] = {
    # family -> (per-node rule, root last slot must be empty)
    "plane": (None, False),
    "lks": (_lks_node_ok, False),
    "llks": (_lks_node_ok, True),
    "slks": (_slks_node_ok, False),
    "sllks": (_slks_node_ok, True),
}


def _trees_on(labels: frozenset[int], arity: int, rule: NodeRule | None, memo: dict) -> list[PlaneTree]:
    if labels in memo:
        return memo[labels]
    out = []
    for r in sorted(labels):
        rest = sorted(labels - {r})
        for assign in product(range(1, arity + 1), repeat=len(rest)):
            groups: dict[int, frozenset[int]] = {}
            for v, s in zip(rest, assign):
                groups[s] = groups.get(s, frozenset()) | {v}
            slots = sorted(groups)
            options = [_trees_on(groups[s], arity, rule, memo) for s in slots]
            for subs in product(*options):
                kids = {s: sub.root for s, sub in zip(slots, subs)}
                if rule is not None and not rule(r, kids, arity):
                    continue
                links = set()
                for s, sub in zip(slots, subs):
                    links |= sub.links
                    links.add((r, s, sub.root))
                out.append(PlaneTree(arity, r, frozenset(links)))
    memo[labels] = out
    return out


def _tree_sort_key(t: PlaneTree) -> tuple:
    return (t.root, sorted(t.links))


def enumerate_trees(
    labels: Iterable[int],
    arity: int,
    predicate: Callable[[PlaneTree], bool] | None = None,
    family: str = "plane",
) -> list[PlaneTree]:
    """All plane ``arity``-ary trees on ``labels`` passing ``predicate``.

    ``family`` prunes during construction with that family's per-node rule;
    ``predicate`` is applied to every finished tree regardless.
    """
    rule, left = FAMILY_RULES[family]
    ls = frozenset(labels)
    if not ls:
        return []
    trees = _trees_on(ls, arity, rule, {})
    if left:
        trees = [t for t in trees if t.child(t.root, arity) is None]
    if predicate is not None:
        trees = [t for t in trees if predicate(t)]
    return sorted(trees, key=_tree_sort_key)


def enumerate_family(family: str, labels: Iterable[int], arity: int = 2) -> list[PlaneTree]:
    """Named families: lbs, llbs, rlbs, lks, llks, slks, sllks."""
    preds = {
        "lbs": ("lks", lambda t: is_lks(t, 2)),
        "llbs": ("llks", lambda t: is_llks(t, 2)),
        "rlbs": ("lks", is_rlbs),
        "lks": ("lks", lambda t: is_lks(t, arity)),
        "llks": ("llks", lambda t: is_llks(t, arity)),
        "slks": ("slks", lambda t: is_slks(t, arity)),
        "sllks": ("sllks", lambda t: is_sllks(t, arity)),
    }
    if family not in preds:
        raise ValueError(f"unknown tree family {family!r}")
    k = 2 if family in ("lbs", "llbs", "rlbs") else arity
    rule, pred = preds[family]
    return enumerate_trees(labels, k, pred, family=rule)


# --- coloured trees -----------------------------------------------------------


@dataclass(frozen=True)
class ColouredTree:
    root: int
    edges: frozenset[tuple[int, int, int]]  # (parent, child, colour)

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(self.edges))
        kids = [c for _, c, _ in self.edges]
        if len(set(kids)) != len(kids) or self.root in kids:
            raise ValueError("every non-root vertex needs exactly one parent")
        if len(self.labels) != len(self.edges) + 1:
            raise ValueError("edges do not form a tree hanging from the root")

    @cached_property
    def _kids(self) -> dict[int, list[tuple[int, int]]]:
        kids: dict[int, list[tuple[int, int]]] = {}
        for p, c, col in sorted(self.edges):
            kids.setdefault(p, []).append((c, col))
        return kids

    @cached_property
    def labels(self) -> frozenset[int]:
        out = {self.root}
        stack = [self.root]
        while stack:
            for c, _ in self._kids.get(stack.pop(), []):
                out.add(c)
                stack.append(c)
        return frozenset(out)

    def children(self, v: int) -> list[tuple[int, int]]:
        """(child, colour) pairs sorted by child label."""
        return list(self._kids.get(v, []))

    def subtree(self, v: int) -> ColouredTree:
        keep = []
        stack = [v]
        while stack:
            u = stack.pop()
            for c, col in self._kids.get(u, []):
                keep.append((u, c, col))
                stack.append(c)
        return ColouredTree(v, frozenset(keep))

    def to_json(self) -> dict:
        return {
            "root": self.root,
            "edges": [{"parent": p, "child": c, "colour": col} for p, c, col in sorted(self.edges)],
        }


def is_descent_tree(ct: ColouredTree) -> bool:
    for v in ct.labels:
        ones = [c for c, col in ct.children(v) if col == 1]
        if ones and min(ones) > v:
            return False
    return True


def is_sdescent_tree(ct: ColouredTree) -> bool:
    for v in ct.labels:
        kids = ct.children(v)
        if kids:
            low = min(col for _, col in kids)
            if min(c for c, col in kids if col == low) > v:
                return False
    return True


def llks_to_coloured(t: PlaneTree, arity: int | None = None) -> ColouredTree:
    """Children of colour i are the roots of the slot-i chain pieces."""
    k = t.arity if arity is None else arity
    edges = set()

    def walk(tree: PlaneTree) -> None:
        for slot, pieces in left_decomposition(tree).items():
            for p in pieces:
                edges.add((tree.root, p.root, slot))
                walk(p)

    walk(t)
    if any(col >= k for _, _, col in edges):
        raise ValueError("colour out of range")
    return ColouredTree(t.root, frozenset(edges))


def coloured_to_llks(ct: ColouredTree, arity: int, family: str = "llks") -> PlaneTree:
    """Group children by colour, sort each group and rebuild the chains.

    ``family='llks'`` requires a descent tree; ``'sllks'`` an S-descent tree.
    """
    if any(not 1 <= col < arity for _, _, col in ct.edges):
        raise ValueError(f"colours must lie in 1..{arity - 1}")
    check = {"llks": is_descent_tree, "sllks": is_sdescent_tree}[family]
    if not check(ct):
        raise ValueError(f"coloured tree fails the {family} descent condition")

    def build(v: int) -> PlaneTree:
        groups: dict[int, list[PlaneTree]] = {}
        for c, col in ct.children(v):
            groups.setdefault(col, []).append(build(c))
        return assemble_left(v, arity, groups)

    return build(ct.root)


def enumerate_coloured_trees(labels: Iterable[int], colours: int) -> list[ColouredTree]:
    """Every rooted labelled tree on ``labels`` with edge colours in 1..colours,
    by brute force over parent maps."""
    ls = sorted(labels)
    out = []
    for root in ls:
        others = [v for v in ls if v != root]
        for parents in product(ls, repeat=len(others)):
            par = dict(zip(others, parents))
            if any(p == v for v, p in par.items()) or not _reaches_root(par, root):
                continue
            for cols in product(range(1, colours + 1), repeat=len(others)):
                out.append(ColouredTree(root, frozenset((par[v], v, col) for v, col in zip(others, cols))))
    return out


def _reaches_root(par: dict[int, int], root: int) -> bool:
    for v in par:
        seen = set()
        while v != root:
            if v in seen:
                return False
            seen.add(v)
            v = par[v]
    return True
