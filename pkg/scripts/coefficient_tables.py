#!/usr/bin/env python3
"""Tabulate one-variable Poincare series coefficients next to their closed
forms for a range of hooks, in the style of a hand-checkable table.
"""

import argparse
import sys
from dataclasses import dataclass

from superschur.poincare import p_series, univariate_coefficients
from superschur.qseries import closed_form_series


@dataclass
class TableConfig:
    max_k: int = 2
    max_l: int = 2
    degree: int = 10
    route: str = "char"


def parse_args(argv=None) -> TableConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=2)
    parser.add_argument("--max-l", type=int, default=2)
    parser.add_argument("--degree", type=int, default=10)
    parser.add_argument("--route", choices=["residue", "char"], default="char")
    args = parser.parse_args(argv)
    return TableConfig(args.max_k, args.max_l, args.degree, args.route)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    mismatches = 0
    for k in range(cfg.max_k + 1):
        for l in range(cfg.max_l + 1):
            if k + l == 0:
                continue
            series = p_series("prime", (k, l), 1, 0, cfg.degree, route=cfg.route)
            got = univariate_coefficients(series, cfg.degree)
            want = list(closed_form_series("traces_n1", (k, l), cfg.degree).coeffs)
            mark = "" if got == want else "   <-- MISMATCH"
            mismatches += got != want
            print(f"hook ({k},{l})  even variable: {got}{mark}")
            if k >= l:
                series = p_series("prime", (k, l), 0, 1, cfg.degree,
                                  route=cfg.route)
                got = univariate_coefficients(series, cfg.degree)
                want = list(closed_form_series("supertraces_01", (k, l),
                                               cfg.degree).coeffs)
                mark = "" if got == want else "   <-- MISMATCH"
                mismatches += got != want
                print(f"hook ({k},{l})  odd variable:  {got}{mark}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
