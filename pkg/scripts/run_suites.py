#!/usr/bin/env python3
"""Run every verification suite and dump the reports as JSON."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from gainforest.verify import SUITES, VerifyConfig, run_suite

# suites whose cost grows fastest get a smaller default ceiling
DEFAULT_N = {"general-lks": 4, "general-slks": 4, "coloured": 5, "oracle": 5, "decomposition": 5, "order": 5}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Path("reports"))
    ap.add_argument("--n-max", type=int, help="override every suite's ceiling")
    ap.add_argument("--kappa", type=int, default=3)
    ap.add_argument("--suite", action="append", choices=SUITES)
    args = ap.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    failed = 0
    for suite in args.suite or SUITES:
        cfg = VerifyConfig(suite=suite, n_max=args.n_max or DEFAULT_N.get(suite, 6), kappa=args.kappa)
        rep = run_suite(cfg)
        (args.out_dir / f"{suite}.json").write_text(json.dumps(rep.to_json(), indent=1, default=str))
        status = "PASS" if rep.passed else "FAIL"
        print(f"{suite:14s} n<={cfg.n_max}  {status}  {len(rep.records):4d} identities  {rep.wall_time:6.2f}s")
        failed += not rep.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
