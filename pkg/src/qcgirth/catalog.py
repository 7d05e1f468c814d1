"""Abstract cycle configurations and their quasi-cyclic labelings.

A configuration of a 2s-cycle is the grid of counts t[i][j] of cycle
points falling in each block of a decomposition minor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence

Grid = tuple[tuple[int, ...], ...]


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n in descending order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def weights_vectors(s: int) -> list[tuple[int, ...]]:
    """Partitions of 2s that do not have exactly two odd parts."""
    if s < 2:
        raise ValueError("s must be at least 2")
    return [p for p in partitions(2 * s) if sum(x % 2 for x in p) != 2]


def feasible_for_type(r: int, c: int, s: int) -> list[tuple[int, ...]]:
    """Weights vectors that can fill an r x c configuration of a 2s-cycle."""
    if not (1 <= r <= s and 1 <= c <= s):
        raise ValueError(f"type ({r},{c}) out of range for s={s}")
    r, c = min(r, c), max(r, c)
    lo, hi = r + c - 1, min(r * c, 2 * s)
    top = 2 * s - 2 * (c - 1)
    return [w for w in weights_vectors(s) if lo <= len(w) <= hi and w[0] <= top]


def _transpose(g: Grid) -> Grid:
    return tuple(zip(*g)) if g else g


def canonical_grid(grid: Sequence[Sequence[int]]) -> Grid:
    """Lexicographically largest form under row/column permutations.

    Grids are oriented with no more rows than columns; square grids are
    also compared against their transpose.
    """
    g: Grid = tuple(tuple(int(x) for x in row) for row in grid)
    if len(g) > len(g[0]):
        g = _transpose(g)
    cands = [g, _transpose(g)] if len(g) == len(g[0]) else [g]
    best: Grid | None = None
    for h in cands:
        for perm in permutations(range(len(h))):
            rows = [h[i] for i in perm]
            cols = sorted(zip(*rows), reverse=True)
            cand = tuple(zip(*cols))
            if best is None or cand > best:
                best = cand
    assert best is not None
    return best


def _connected(g: Grid) -> bool:
    r, c = len(g), len(g[0])
    seen_r, seen_c = {0}, set()
    stack = [("r", 0)]
    while stack:
        kind, k = stack.pop()
        if kind == "r":
            for j in range(c):
                if g[k][j] and j not in seen_c:
                    seen_c.add(j)
                    stack.append(("c", j))
        else:
            for i in range(r):
                if g[i][k] and i not in seen_r:
                    seen_r.add(i)
                    stack.append(("r", i))
    return len(seen_r) == r and len(seen_c) == c


def is_valid_configuration(grid: Sequence[Sequence[int]]) -> bool:
    """Even nonzero line sums and a connected support."""
    g: Grid = tuple(tuple(row) for row in grid)
    for line in list(g) + list(zip(*g)):
        t = sum(line)
        if t == 0 or t % 2:
            return False
    return _connected(g)


@dataclass(frozen=True, order=True)
class CycleConfiguration:
    grid: Grid

    @property
    def s(self) -> int:
        return sum(map(sum, self.grid)) // 2

    @property
    def type(self) -> tuple[int, int]:
        return len(self.grid), len(self.grid[0])

    @property
    def weights_vector(self) -> tuple[int, ...]:
        return tuple(sorted((x for row in self.grid for x in row if x), reverse=True))

    def transpose(self) -> CycleConfiguration:
        return CycleConfiguration(_transpose(self.grid))

    def __str__(self) -> str:
        return "|" + "; ".join(" ".join(map(str, row)) for row in self.grid) + "|"


def _placements(r: int, c: int, weights: tuple[int, ...]) -> Iterator[Grid]:
    """Distinct fillings of an r x c grid with the weights and zeros."""
    cells = r * c
    values = list(weights) + [0] * (cells - len(weights))
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts, reverse=True)
    out = [0] * cells

    def rec(pos: int) -> Iterator[Grid]:
        if pos == cells:
            yield tuple(tuple(out[i * c:(i + 1) * c]) for i in range(r))
            return
        # prune: a finished row must have an even nonzero sum
        if pos % c == 0 and pos:
            row = out[pos - c:pos]
            if sum(row) == 0 or sum(row) % 2:
                return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out[pos] = k
                yield from rec(pos + 1)
                counts[k] += 1

    yield from rec(0)


def configurations_of_type(r: int, c: int, s: int, prune: bool = True) -> set[CycleConfiguration]:
    out: set[CycleConfiguration] = set()
    for w in (feasible_for_type(r, c, s) if prune else weights_vectors(s)):
        if len(w) > r * c:
            continue
        for g in _placements(r, c, w):
            if is_valid_configuration(g):
                out.add(CycleConfiguration(canonical_grid(g)))
    return out


def enumerate_configurations(s: int, prune: bool = True) -> list[CycleConfiguration]:
    """All 2s-cycle configurations up to row/column permutation and transpose."""
    if s not in (2, 3, 4):
        raise ValueError("the full catalog is supported for s in {2, 3, 4}")
    found: set[CycleConfiguration] = set()
    for r in range(1, s + 1):
        for c in range(r, s + 1):
            found |= configurations_of_type(r, c, s, prune)
    return sorted(found, key=lambda cfg: (cfg.type, tuple(-x for row in cfg.grid for x in row)))


# quasi-cyclic labelings

C, J, DELTA, O = "C", "J", "Δ", "O"


@dataclass(frozen=True)
class QcConfiguration:
    """Grid of labels: (kind, count) with kind in C, J, Δ, or (O, 0)."""

    cells: tuple[tuple[tuple[str, int], ...], ...]

    @property
    def counts(self) -> Grid:
        return tuple(tuple(n for _, n in row) for row in self.cells)

    def __str__(self) -> str:
        def cell(k: str, n: int) -> str:
            return O if k == O else f"{k}-{n}"

        return "|" + "; ".join(" ".join(cell(k, n) for k, n in row) for row in self.cells) + "|"


def allowed_labels(grid: Sequence[Sequence[int]], i: int, j: int) -> tuple[str, ...]:
    """Circulant kinds that can host t[i][j] points of a 2s-cycle (2s <= 8).

    A weight-1 block holds its points in distinct rows and columns, so each
    of them needs a partner in the same block row and block column outside
    the block; it also cannot hold three or more points of a short cycle.
    """
    t = grid[i][j]
    if t == 0:
        return (O,)
    row_rest = sum(grid[i]) - t
    col_rest = sum(grid[k][j] for k in range(len(grid))) - t
    ok_j = t <= 2 and row_rest >= t and col_rest >= t
    return (C, J) if ok_j else (C,)


def qc_specialize(cfg: CycleConfiguration | Sequence[Sequence[int]]) -> set[QcConfiguration]:
    grid = cfg.grid if isinstance(cfg, CycleConfiguration) else tuple(tuple(r) for r in cfg)
    if sum(map(sum, grid)) > 8:
        raise ValueError("labeling rules are stated for cycles of length at most 8")
    cells = []
    for i, row in enumerate(grid):
        out_row = []
        for j, t in enumerate(row):
            labels = allowed_labels(grid, i, j)
            kind = DELTA if len(labels) == 2 else labels[0]
            out_row.append((kind, t))
        cells.append(tuple(out_row))
    return {QcConfiguration(tuple(cells))}


def label_matches(label: str, block_weight: int) -> bool:
    if label == C:
        return block_weight == 2
    if label == J:
        return block_weight == 1
    if label == DELTA:
        return block_weight in (1, 2)
    return True


def catalog_json(s: int) -> str:
    items = []
    for cfg in enumerate_configurations(s):
        (qc,) = qc_specialize(cfg)
        items.append({
            "type": list(cfg.type),
            "grid": [list(r) for r in cfg.grid],
            "weights_vector": list(cfg.weights_vector),
            "qc": str(qc),
        })
    return json.dumps({"s": s, "count": len(items), "configurations": items}, indent=2, ensure_ascii=False)


def parse_grid(text: str) -> Grid:
    """Parse '|4 2; 0 2|' style grids."""
    body = text.strip().strip("|")
    return tuple(tuple(int(x) for x in row.split()) for row in body.split(";"))


def canonical_set(grids: Iterable[Sequence[Sequence[int]]]) -> set[Grid]:
    return {canonical_grid(g) for g in grids}
