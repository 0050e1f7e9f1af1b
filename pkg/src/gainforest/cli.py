"""gainforest command-line interface."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from typing import Any, Sequence

from . import bijections as bj
from .formats import load_object, to_dot, to_json
from .gaingraph import GainGraph, make_interval_gain_graph
from .heights import iter_coherent_heights, parse_height, select_coherent_subgraph
from .nbc import NbcTree, enumerate_nbc_sets, enumerate_nbc_trees, lex_key, order_from_sequence
from .oracle import char_poly, linial_formula, region_count
from .trees import enumerate_coloured_trees, enumerate_family, is_descent_tree, is_sdescent_tree
from .verify import SUITES, VerifyConfig, run_suite

MAX_N = 7
FAMILIES = (
    "nbc-sets", "nbc-trees", "lbs", "llbs", "rlbs", "lks", "llks", "slks", "sllks",
    "coloured-descent", "coloured-sdescent",
)


class UsageError(Exception):
    pass


def _emit(rows: list[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "csv":
        w = csv.DictWriter(out, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        out.write(json.dumps(rows if len(rows) != 1 else rows[0], sort_keys=True) + "\n")


def _edge_key(g: GainGraph, seed_order: str | None):
    if not seed_order:
        return lex_key
    perm = [int(x) for x in seed_order.split(",")]
    edges = g.sorted_edges()
    if sorted(perm) != list(range(len(edges))):
        raise UsageError(f"--seed-order must be a permutation of 0..{len(edges) - 1}")
    return order_from_sequence([edges[i] for i in perm])


def _graph(args) -> GainGraph:
    if not 1 <= args.n <= MAX_N:
        raise UsageError(f"n={args.n} is out of range; supported 1 <= n <= {MAX_N}")
    if args.a > args.b:
        raise UsageError(f"empty gain interval [{args.a},{args.b}]")
    return make_interval_gain_graph(args.n, args.a, args.b)


def _nbc_trees(g: GainGraph) -> list[NbcTree]:
    out = []
    for h in iter_coherent_heights(g):
        out.extend(enumerate_nbc_trees(select_coherent_subgraph(g, h), h))
    return out


def cmd_count(args) -> int:
    g = _graph(args)
    if args.height:
        h = parse_height(args.height)
        if set(h) != g.vertices:
            raise UsageError("--height must give a level for every vertex 1..n")
        args.trees = True
        objs = enumerate_nbc_trees(select_coherent_subgraph(g, h), h)
    elif args.trees:
        objs = _nbc_trees(g)
    if args.trees:
        refine = None
        if args.per_corner:
            refine = lambda t: t.corner
        elif args.per_subcorner:
            refine = lambda t: t.subcorner
        elif args.per_height:
            refine = lambda t: ",".join(map(str, t.height.vector()))
    else:
        objs = enumerate_nbc_sets(g, _edge_key(g, args.seed_order))
        refine = None
        if args.per_corner or args.per_height or args.per_subcorner:
            raise UsageError("corner, subcorner and height refinements apply to --trees only")
    if refine is None:
        _emit([{"n": args.n, "a": args.a, "b": args.b, "kind": "trees" if args.trees else "sets", "count": len(objs)}], args.format)
        return 0
    counts = Counter(refine(t) for t in objs)
    if args.format == "csv":
        _emit([{"key": k, "count": v} for k, v in sorted(counts.items())], "csv")
    else:
        print(json.dumps({str(k): v for k, v in sorted(counts.items())}))
    return 0


def _enumerate(family: str, n: int, kappa: int, a: int, b: int) -> list[Any]:
    labels = range(1, n + 1)
    if family == "nbc-sets":
        g = make_interval_gain_graph(n, a, b)
        return [g.with_edges(s) for s in enumerate_nbc_sets(g)]
    if family == "nbc-trees":
        return _nbc_trees(make_interval_gain_graph(n, a, b))
    if family in ("coloured-descent", "coloured-sdescent"):
        pred = is_descent_tree if family == "coloured-descent" else is_sdescent_tree
        return [ct for ct in enumerate_coloured_trees(labels, kappa - 1) if pred(ct)]
    arity = 2 if family in ("lbs", "llbs", "rlbs") else kappa
    return enumerate_family(family, labels, arity)


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= MAX_N:
        raise UsageError(f"n={args.n} is out of range; supported 1 <= n <= {MAX_N}")
    if args.kappa < 2:
        raise UsageError("--kappa must be at least 2")
    objs = _enumerate(args.family, args.n, args.kappa, args.a, args.b)
    if args.count_only:
        print(len(objs))
        return 0
    for o in objs:
        print(json.dumps(to_json(o), sort_keys=True))
    return 0


def cmd_map(args) -> int:
    key = (args.src, args.dst)
    if key not in bj.MAPS:
        pairs = ", ".join(f"{a}->{b}" for a, b in sorted(bj.MAPS))
        raise UsageError(f"no map {args.src}->{args.dst}; available: {pairs}")
    obj = load_object(args.input)
    if args.src == "nbc":
        if not isinstance(obj, GainGraph):
            raise UsageError("input is not a gain graph")
        obj = NbcTree(obj.vertices, obj.edges)
    trace = bj.BijectionTrace() if args.trace else None
    try:
        if trace is not None and args.src in ("llks", "sllks", "llbs"):
            fn = {"llks": bj.llks_to_nbc, "sllks": bj.sllks_to_nbc, "llbs": bj.llks_to_nbc}[args.src]
            result = fn(obj, args.kappa if args.src != "llbs" else 2, trace)
        else:
            result = bj.MAPS[key](obj, args.kappa)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    payload: dict[str, Any] = {"result": to_json(result)}
    if trace is not None:
        payload["trace"] = trace.to_json()
    print(json.dumps(payload, sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    seed = tuple(int(x) for x in args.seed_order.split(",")) if args.seed_order else None
    cfg = VerifyConfig(suite=args.suite, n_max=args.n_max, kappa=args.kappa, seed_order=seed)
    rep = run_suite(cfg)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity", "key", "left", "right", "lhs", "rhs", "pass"])
        w.writerows(rep.rows())
        text = buf.getvalue()
    else:
        text = json.dumps(rep.to_json(), indent=1, default=str) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for d in rep.diagnostics:
        if not d["agrees"]:
            print(f"diagnostic: n={d['n']} closed form {d['formula']} != count {d.get('brute_force', d.get('regions'))}", file=sys.stderr)
    status = "PASS" if rep.passed else "FAIL"
    print(f"{rep.suite}: {status} ({len(rep.records)} identities, {rep.wall_time:.2f}s)", file=sys.stderr)
    return 0 if rep.passed else 1


def cmd_oracle(args) -> int:
    g = _graph(args)
    want_all = not (args.char_poly or args.regions or args.formula)
    out: dict[str, Any] = {}
    if args.char_poly or args.regions or want_all:
        poly = char_poly(g)
        if args.char_poly or want_all:
            out["chi"] = poly.descending()
            out["chi_text"] = str(poly)
        if args.regions or want_all:
            out["regions"] = region_count(g, poly)
    if args.formula or want_all:
        f = linial_formula(args.n)
        out["formula"] = str(f)
    print(json.dumps(out, sort_keys=True))
    return 0


def cmd_export_dot(args) -> int:
    obj = load_object(args.input)
    text = to_dot(obj)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    # SUPPRESS lets the flags appear before or after the subcommand
    fmt.add_argument("--json", dest="format", action="store_const", const="json", default=argparse.SUPPRESS)
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv", default=argparse.SUPPRESS)
    common.add_argument(
        "--seed-order", default=argparse.SUPPRESS, help="edge order as a permutation of lex edge indices, e.g. 2,0,1"
    )

    p = argparse.ArgumentParser(prog="gainforest", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def interval(sp, n=True):
        if n:
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--a", type=int, default=1)
        sp.add_argument("--b", type=int, default=1)

    c = sub.add_parser("count", parents=[common], help="NBC set or tree counts")
    interval(c)
    kind = c.add_mutually_exclusive_group()
    kind.add_argument("--sets", action="store_true")
    kind.add_argument("--trees", action="store_true")
    refine = c.add_mutually_exclusive_group()
    refine.add_argument("--per-corner", action="store_true")
    refine.add_argument("--per-subcorner", action="store_true")
    refine.add_argument("--per-height", action="store_true")
    c.add_argument("--height", help="count NBC trees of the coherent subgraph of one height, e.g. 1:0,2:1,3:1")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", parents=[common], help="list a family as JSON lines")
    e.add_argument("family", choices=FAMILIES)
    interval(e)
    e.add_argument("--kappa", type=int, default=2)
    e.add_argument("--count-only", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    m = sub.add_parser("map", parents=[common], help="apply a bijection to a JSON object")
    m.add_argument("--from", dest="src", required=True)
    m.add_argument("--to", dest="dst", required=True)
    m.add_argument("--kappa", type=int, default=2)
    m.add_argument("--input", required=True)
    m.add_argument("--trace", action="store_true")
    m.set_defaults(func=cmd_map)

    v = sub.add_parser("verify", parents=[common], help="run a count-identity suite")
    v.add_argument("--suite", choices=SUITES, default="linial")
    v.add_argument("--n-max", type=int, default=4)
    v.add_argument("--kappa", type=int, default=3)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", parents=[common], help="finite-field characteristic polynomial")
    interval(o)
    o.add_argument("--char-poly", action="store_true")
    o.add_argument("--regions", action="store_true")
    o.add_argument("--formula", action="store_true")
    o.set_defaults(func=cmd_oracle)

    d = sub.add_parser("export-dot", parents=[common], help="DOT rendering of a JSON object")
    d.add_argument("--input", required=True)
    d.add_argument("--out")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    args.format = getattr(args, "format", "json")
    args.seed_order = getattr(args, "seed_order", None)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gainforest: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"gainforest: error: cannot read input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
