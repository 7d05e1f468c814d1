#!/usr/bin/env python3
"""Exact Bresnan solution counts over a range of (m, alpha).

    python scripts/count_bresnan.py --m 4:14 --alpha 4 --jobs 4
"""

import argparse
import time

from qcgirth.search import bresnan_count


def span(text: str) -> range:
    if ":" in text:
        lo, hi = text.split(":")
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--m", default="4:13", help="m or lo:hi (inclusive)")
    ap.add_argument("--alpha", default="4", help="alpha or lo:hi (inclusive)")
    ap.add_argument("--jobs", type=int, default=None)
    args = ap.parse_args()
    print("m,alpha,count,seconds")
    for alpha in span(args.alpha):
        for m in span(args.m):
            t0 = time.perf_counter()
            n = bresnan_count(m, alpha, jobs=args.jobs)
            print(f"{m},{alpha},{n},{time.perf_counter() - t0:.1f}", flush=True)


if __name__ == "__main__":
    main()
