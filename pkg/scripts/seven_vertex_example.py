#!/usr/bin/env python3
"""Walk the seven-vertex LLBS through the corner-keyed Linial bijection.

Prints the tree, its NBC image with heights and the bijection trace, then
writes DOT files for both sides if --dot-dir is given.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from gainforest.bijections import BijectionTrace, llks_to_nbc, nbc_to_llbs
from gainforest.formats import to_dot
from gainforest.trees import PlaneTree

TREE = PlaneTree.build(2, 4, {(4, 1): 1, (1, 2): 3, (3, 2): 5, (5, 1): 2, (5, 2): 7, (7, 1): 6})


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dot-dir", type=Path)
    args = ap.parse_args()

    trace = BijectionTrace()
    img = llks_to_nbc(TREE, 2, trace)
    print("tree:     ", TREE)
    print("nbc tree: ", img)
    print("heights:  ", dict(sorted(img.height.items())))
    print("corner", img.corner, "subcorner", img.subcorner)
    print("trace:    ", json.dumps(trace.to_json()))
    print("inverse ok:", nbc_to_llbs(img) == TREE)

    if args.dot_dir:
        args.dot_dir.mkdir(parents=True, exist_ok=True)
        (args.dot_dir / "llbs.dot").write_text(to_dot(TREE))
        (args.dot_dir / "nbc.dot").write_text(to_dot(img))
        print("wrote", args.dot_dir / "llbs.dot", "and", args.dot_dir / "nbc.dot")


if __name__ == "__main__":
    main()
