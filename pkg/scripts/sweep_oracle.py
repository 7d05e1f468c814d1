#!/usr/bin/env python3
"""Compare each family's girth test with the BFS oracle on searched codes.

For every seed a passing code is searched, then a few of its rows are
replaced at random; the family verdict must match BFS each time.
"""

import argparse
import random

from qcgirth.blockmatrix import expand_block
from qcgirth.families import FAMILIES
from qcgirth.oracle import girth_bfs
from qcgirth.search import SearchExhausted, random_search

DEFAULTS = {
    "bresnan": (13, 4, {}),
    "rate23": (19, 6, {}),
    "reg24": (23, 8, {"delta": 6}),
    "reg36": (23, 39, {"delta2": 4, "delta3": 15}),
}


def verdict_ok(name: str, g) -> bool:
    if name == "rate23":
        return g == 8
    return g is None or g >= FAMILIES[name].target_girth


def mutate(rng: random.Random, states, m: int, n_polys: int, has_j: bool):
    out = [list(s) for s in states]
    row = rng.randrange(len(out))
    new = []
    for _ in range(n_polys):
        new += sorted(rng.sample(range(m), 2))
    if has_j:
        new.append(rng.randrange(m))
    out[row] = new
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=sorted(DEFAULTS), action="append")
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--mutations", type=int, default=20)
    args = ap.parse_args()
    for name in args.family or sorted(DEFAULTS):
        spec = FAMILIES[name]
        m, alpha, shape = DEFAULTS[name]
        agree = total = 0
        for seed in range(args.seeds):
            try:
                base = random_search(name, m, alpha, seed=seed, **shape).states()
            except SearchExhausted:
                print(f"{name} seed {seed}: search exhausted")
                continue
            rng = random.Random(seed)
            for k in range(args.mutations + 1):
                states = base if k == 0 else mutate(rng, base, m, spec.n_polys, spec.has_j)
                p = spec.from_states(m, states, **shape)
                g = girth_bfs(expand_block(spec.build(p)))
                agree += spec.check(p) == verdict_ok(name, g)
                total += 1
        print(f"{name}: {agree}/{total} verdicts agree with BFS")


if __name__ == "__main__":
    main()
