"""Brute-force cycle machinery used as ground truth.

Nothing here knows about circulants: every function works on the
expanded binary matrix or on raw entry sets.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .sparse import SparseBinaryMatrix

Entry = tuple[int, int]


class TannerGraph:
    """Check nodes are 0..n_rows-1, bit nodes n_rows..n_rows+n_cols-1."""

    def __init__(self, mat: SparseBinaryMatrix):
        self.n_checks = mat.n_rows
        self.n_bits = mat.n_cols
        off = mat.n_rows
        self.adj: list[tuple[int, ...]] = [tuple(off + c for c in row) for row in mat.rows]
        self.adj += [tuple(col) for col in mat.cols]
        self.n_edges = mat.nnz

    def __len__(self) -> int:
        return len(self.adj)

    def entry(self, u: int, v: int) -> Entry:
        """Matrix position of the edge between nodes u and v."""
        if u > v:
            u, v = v, u
        return u, v - self.n_checks


def _shortest_cycle_through(adj: Sequence[Sequence[int]], root: int, best: int) -> int:
    dist = {root: 0}
    parent = {root: -1}
    q = deque([root])
    while q:
        u = q.popleft()
        du = dist[u]
        if 2 * du + 1 >= best:
            break
        for w in adj[u]:
            if w == parent[u]:
                continue
            dw = dist.get(w)
            if dw is None:
                dist[w] = du + 1
                parent[w] = u
                q.append(w)
            else:
                best = min(best, du + dw + 1)
    return best


def girth_bfs(mat: SparseBinaryMatrix | TannerGraph, starts: Iterable[int] | None = None) -> int | None:
    """Length of the shortest Tanner-graph cycle, or None if acyclic.

    ``starts`` restricts the BFS roots (node ids of the TannerGraph); the
    result is exact only if every shortest cycle meets one of them.
    """
    g = mat if isinstance(mat, TannerGraph) else TannerGraph(mat)
    best = math.inf
    for v in range(len(g)) if starts is None else starts:
        best = _shortest_cycle_through(g.adj, v, best)
    return None if best == math.inf else int(best)


def enumerate_cycles(mat: SparseBinaryMatrix, max_len: int = 8) -> Iterator[frozenset[Entry]]:
    """Every simple Tanner cycle of length <= max_len, once, as its entry set."""
    g = TannerGraph(mat)
    adj = g.adj
    path: list[int] = []
    on_path: set[int] = set()

    def dfs(u: int, start: int) -> Iterator[frozenset[Entry]]:
        for w in adj[u]:
            if w == start and len(path) >= 4 and path[1] < path[-1]:
                nodes = path + [start]
                yield frozenset(g.entry(nodes[k], nodes[k + 1]) for k in range(len(path)))
            elif w > start and w not in on_path and len(path) < max_len:
                path.append(w)
                on_path.add(w)
                yield from dfs(w, start)
                path.pop()
                on_path.discard(w)

    for start in range(len(adj)):
        path[:] = [start]
        on_path.clear()
        on_path.add(start)
        yield from dfs(start, start)


def count_cycles_upto(mat: SparseBinaryMatrix, max_len: int = 8) -> dict[int, int]:
    """Number of distinct 2s-cycles for each length 2s <= max_len (zeros omitted)."""
    if max_len not in (4, 6, 8):
        raise ValueError("max_len must be 4, 6 or 8")
    out: dict[int, int] = {}
    for cyc in enumerate_cycles(mat, max_len):
        out[len(cyc)] = out.get(len(cyc), 0) + 1
    return dict(sorted(out.items()))


def is_linked(entries: Iterable[Entry]) -> bool:
    """2s entries lying in exactly s rows and s columns."""
    v = set(entries)
    if len(v) % 2:
        raise ValueError(f"entry set has odd size {len(v)}")
    s = len(v) // 2
    return len({r for r, _ in v}) == s and len({c for _, c in v}) == s


def is_2s_cycle(entries: Iterable[Entry]) -> bool:
    """Linked with no smaller linked subset."""
    v = sorted(set(entries))
    if not is_linked(v):
        return False
    s = len(v) // 2
    for r in range(2, s):
        for sub in combinations(v, 2 * r):
            if is_linked(sub):
                return False
    return True


def girth_upper_bound(c: int, s: int, r: int) -> int:
    """Largest even integer not above 4*log_a(r) + 4 with a = (c-1)(s-1)."""
    a = (c - 1) * (s - 1)
    if a <= 1:
        raise ValueError(f"(c-1)(s-1) must exceed 1, got {a}")
    if r < 1:
        raise ValueError("r must be positive")
    bound = 4 * math.log(r) / math.log(a) + 4
    g = int(math.floor(bound + 1e-9))
    return g - (g % 2)
