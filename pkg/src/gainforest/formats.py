"""JSON and DOT interchange for gain graphs, NBC trees, plane and coloured trees."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .gaingraph import GainEdge, GainGraph
from .heights import HeightFunction
from .nbc import NbcTree
from .trees import ColouredTree, PlaneTree


def graph_to_json(g: GainGraph | NbcTree) -> dict:
    return {
        "vertices": sorted(g.vertices),
        "edges": [{"i": e.tail, "j": e.head, "g": e.gain} for e in sorted(g.edges)],
    }


def graph_from_json(data: dict) -> GainGraph:
    edges = []
    for item in data["edges"]:
        i, j, g = int(item["i"]), int(item["j"]), int(item["g"])
        if not i < j:
            raise ValueError(f"edge {item} is not in canonical form (need i < j)")
        edges.append(GainEdge(i, j, g))
    return GainGraph(frozenset(int(v) for v in data["vertices"]), frozenset(edges))


def nbc_tree_from_json(data: dict) -> NbcTree:
    g = graph_from_json(data)
    return NbcTree(g.vertices, g.edges)


def tree_from_json(data: dict) -> PlaneTree:
    return PlaneTree(
        int(data["arity"]),
        int(data["root"]),
        frozenset((int(c["node"]), int(c["slot"]), int(c["child"])) for c in data.get("children", [])),
    )


def coloured_from_json(data: dict) -> ColouredTree:
    return ColouredTree(
        int(data["root"]),
        frozenset((int(e["parent"]), int(e["child"]), int(e["colour"])) for e in data.get("edges", [])),
    )


def height_to_json(h: HeightFunction) -> dict[str, int]:
    return h.to_json()


def height_from_json(data: dict) -> HeightFunction:
    return HeightFunction({int(k): int(v) for k, v in data.items()})


def to_json(obj: Any) -> Any:
    if isinstance(obj, (GainGraph, NbcTree)):
        return graph_to_json(obj)
    if isinstance(obj, (PlaneTree, ColouredTree, HeightFunction)):
        return obj.to_json()
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def load_object(path: str | Path) -> GainGraph | PlaneTree | ColouredTree:
    """Read any of the three formats, telling them apart by their keys."""
    data = json.loads(Path(path).read_text())
    return object_from_json(data)


def object_from_json(data: dict) -> GainGraph | PlaneTree | ColouredTree:
    if "arity" in data:
        return tree_from_json(data)
    if "vertices" in data:
        return graph_from_json(data)
    if "root" in data:
        return coloured_from_json(data)
    raise ValueError("unrecognised JSON object")


# --- DOT ------------------------------------------------------------------------


def graph_to_dot(g: GainGraph | NbcTree, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in sorted(g.vertices)]
    lines += [f'  {e.tail} -- {e.head} [label="{e.gain}"];' for e in sorted(g.edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(t: PlaneTree, name: str = "T") -> str:
    lines = [f"digraph {name} {{", "  ordering=out;", f"  {t.root};"]
    stack = [t.root]
    while stack:
        v = stack.pop()
        for s, c in t.children(v).items():
            lines.append(f'  {v} -> {c} [label="{s}"];')
            stack.append(c)
    lines.append("}")
    return "\n".join(lines) + "\n"


def coloured_to_dot(ct: ColouredTree, name: str = "C") -> str:
    lines = [f"digraph {name} {{", f"  {ct.root};"]
    lines += [f'  {p} -> {c} [label="{col}"];' for p, c, col in sorted(ct.edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(obj: Any) -> str:
    if isinstance(obj, (GainGraph, NbcTree)):
        return graph_to_dot(obj)
    if isinstance(obj, PlaneTree):
        return tree_to_dot(obj)
    if isinstance(obj, ColouredTree):
        return coloured_to_dot(obj)
    raise TypeError(f"no DOT form for {type(obj).__name__}")
