#!/usr/bin/env python3
"""Run every machine verification at a chosen scale and print a summary.

Exit status is nonzero if any check fails, so the script can gate CI runs.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

from superschur.partitions import Hook
from superschur.poincare import budzik_suite, check_derivative_relation
from superschur.qseries import check_limit_identity


@dataclass
class VerifyConfig:
    max_size: int = 5
    hooks: list = field(default_factory=lambda: [Hook(1, 1), Hook(2, 1),
                                                 Hook(1, 2), Hook(2, 2)])
    degree: int = 20
    slice_degree: int = 4
    jobs: int = 1
    verbose: bool = False


def parse_args(argv=None) -> VerifyConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=5,
                        help="largest partition size swept per hook")
    parser.add_argument("--hooks", default="1,1;2,1;1,2;2,2",
                        help="semicolon-separated k,l pairs")
    parser.add_argument("--degree", type=int, default=20,
                        help="q-series comparison degree")
    parser.add_argument("--slice-degree", type=int, default=4,
                        help="degree for the derivative-slice comparison")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--verbose", action="store_true",
                        help="print one JSON row per case")
    args = parser.parse_args(argv)
    hooks = [Hook(*map(int, chunk.split(","))) for chunk in args.hooks.split(";")]
    return VerifyConfig(args.max_size, hooks, args.degree, args.slice_degree,
                        args.jobs, args.verbose)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    failures = 0

    reports = budzik_suite(cfg.max_size, cfg.hooks, jobs=cfg.jobs)
    bad = [r for r in reports if not r["pass"]]
    failures += len(bad)
    print(f"jump identity: {len(reports)} cases, {len(bad)} failures")
    if cfg.verbose:
        for r in reports:
            print(json.dumps(r))

    for h in cfg.hooks:
        for primed in (False, True):
            ok, rep = check_derivative_relation(h, 1, cfg.slice_degree, primed,
                                                route="char")
            failures += 0 if ok else 1
            tag = "restricted" if primed else "plain"
            print(f"derivative slice ({tag}) at hook ({h.k},{h.l}): "
                  f"{'ok' if ok else 'FAIL'}")
            if cfg.verbose:
                print(json.dumps(rep))

    ok, rep = check_limit_identity("selfconjugate_sum", cfg.degree)
    failures += 0 if ok else 1
    print(f"self-conjugate limit identity to degree {cfg.degree}: "
          f"{'ok' if ok else 'FAIL'}")
    for n in (1, 2, 3):
        ok, rep = check_limit_identity("shifted_sum", cfg.degree, n=n)
        failures += 0 if ok else 1
        print(f"shifted limit identity (n={n}) to degree {cfg.degree}: "
              f"{'ok' if ok else 'FAIL'}")

    print(f"total failures: {failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
