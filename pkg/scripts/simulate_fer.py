#!/usr/bin/env python3
"""FER curve of an N=800 girth-8 Bresnan code (m=40, alpha=10).

Writes CSV to stdout; progress goes to stderr.
"""

import argparse
import csv
import sys

from qcgirth.blockmatrix import expand_block
from qcgirth.decode import SimulationConfig, nonincreasing_within_bars, parse_snr_grid, simulate_fer
from qcgirth.families import build_bresnan
from qcgirth.oracle import girth_bfs
from qcgirth.search import random_search


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--snr", default="0:4:1")
    ap.add_argument("--min-errors", type=int, default=10)
    ap.add_argument("--max-trials", type=int, default=10**6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    bm = build_bresnan(random_search("bresnan", 40, 10, seed=0))
    print(f"N={bm.shape[1]} girth={girth_bfs(expand_block(bm))}", file=sys.stderr)
    cfg = SimulationConfig(min_block_errors=args.min_errors, max_trials=args.max_trials,
                           seed=args.seed, jobs=args.jobs)

    def progress(snr, trials, errors):
        print(f"\r{snr:5.2f} dB  {errors:4d} errors / {trials} trials", end="", file=sys.stderr, flush=True)

    points = simulate_fer(bm, parse_snr_grid(args.snr), config=cfg, progress=progress)
    print(file=sys.stderr)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["snr_db", "trials", "block_errors", "fer", "fer_plus", "fer_minus"])
    for p in points:
        w.writerow(p.as_row())
    print(f"non-increasing within bars: {nonincreasing_within_bars(points)}", file=sys.stderr)


if __name__ == "__main__":
    main()
