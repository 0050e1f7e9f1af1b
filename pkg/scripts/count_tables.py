#!/usr/bin/env python3
"""Print NBC set counts next to tree counts and finite-field region counts.

Every column is computed by a separate enumerator, so a row whose entries
disagree points at a bug.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from gainforest.bijections import gain_interval
from gainforest.gaingraph import make_interval_gain_graph
from gainforest.nbc import count_nbc_sets
from gainforest.oracle import region_count
from gainforest.trees import enumerate_family


@dataclass
class TableConfig:
    kappa: int = 2
    n_max: int = 5
    family: str = "lks"  # "lks" pairs with K^[3-k,k-1], "slks" with K^[1,k-1]
    oracle: bool = True


def rows(cfg: TableConfig):
    a, b = gain_interval("llks" if cfg.family == "lks" else "sllks", cfg.kappa)
    for n in range(1, cfg.n_max + 1):
        g = make_interval_gain_graph(n, a, b)
        row = {
            "n": n,
            "interval": f"[{a},{b}]",
            "nbc_sets": count_nbc_sets(g),
            cfg.family: len(enumerate_family(cfg.family, range(1, n + 1), cfg.kappa)),
        }
        if cfg.oracle:
            row["regions"] = region_count(g)
        yield row


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kappa", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--family", choices=["lks", "slks"], default="lks")
    ap.add_argument("--no-oracle", action="store_true", help="skip the finite-field column")
    args = ap.parse_args()
    cfg = TableConfig(args.kappa, args.n_max, args.family, not args.no_oracle)
    out = list(rows(cfg))
    w = csv.DictWriter(sys.stdout, fieldnames=list(out[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(out)


if __name__ == "__main__":
    main()
