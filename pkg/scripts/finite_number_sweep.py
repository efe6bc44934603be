#!/usr/bin/env python3
"""Sweep finite analogue numbers across principles and write a CSV table.

Usage:
  python scripts/finite_number_sweep.py [--cap 12] [--out sweep.csv]

Window sizes count points: sets-mode principles use {0, ..., N-1} and
vectors-mode principles use {1, ..., N}.  Rows that hit the cap report
"exceeds cap" together with the counterexample colouring found there.
"""

import argparse
import sys
import time

from irl.search import FiniteNumberQuery, sweep_finite_numbers


def default_queries(cap):
    out = []
    for m in (2, 3, 4):
        out.append(FiniteNumberQuery("RT", 1, 2, m, cap))
    out.append(FiniteNumberQuery("RT", 1, 3, 3, cap))
    for m in (2, 3):
        out.append(FiniteNumberQuery("ZRT", 2, 2, m, cap))
    out.append(FiniteNumberQuery("SEPZRT", 2, 1, 3, cap))
    out.append(FiniteNumberQuery("SEPZRT", 2, 2, 3, cap))
    for m in (2, 3, 4):
        out.append(FiniteNumberQuery("AHT", 1, 1, m, cap))
    out.append(FiniteNumberQuery("AHT", 1, 2, 2, cap))
    out.append(FiniteNumberQuery("APAHT", 1, 1, 2, cap))
    out.append(FiniteNumberQuery("APAHT", 1, 1, 3, cap))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cap", type=int, default=12)
    parser.add_argument("--out", default=None, help="CSV path (default: stdout)")
    args = parser.parse_args()

    queries = default_queries(args.cap)
    started = time.monotonic()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            sweep_finite_numbers(queries, handle)
        print(f"wrote {len(queries)} rows to {args.out} "
              f"in {time.monotonic() - started:.1f}s", file=sys.stderr)
    else:
        sweep_finite_numbers(queries, sys.stdout)


if __name__ == "__main__":
    main()
