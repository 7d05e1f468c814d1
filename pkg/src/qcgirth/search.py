"""Parameter search for the code families.

``random_search`` runs randomized backtracking with forward checking over
the clause system of any family.  ``bresnan_search`` counts, enumerates or
uniformly samples Bresnan solutions exactly with a transfer matrix: the
Bresnan clauses only link consecutive rows (cyclically), so solutions are
closed walks of length alpha in a graph on row states.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .families import (
    FAMILIES,
    BresnanParams,
    Clause,
    DeltaConditionError,
    _bresnan_pair,
    delta_violations,
)

_EXACT = float(2**53)


class SearchExhausted(RuntimeError):
    """The budget ran out, or the search space holds no solution."""


def _columns(arr: np.ndarray) -> tuple[np.ndarray, ...]:
    return tuple(arr[:, f] for f in range(arr.shape[1]))


def _filter(dom: np.ndarray, u: int, ready: Sequence[Clause], states: list) -> np.ndarray:
    states[u] = _columns(dom)
    mask = np.ones(len(dom), dtype=bool)
    for c in ready:
        mask &= np.broadcast_to(np.asarray(c.test(*(states[i] for i in c.idx)), dtype=bool), mask.shape)
    states[u] = None
    return dom[mask]


def backtrack(clauses: Sequence[Clause], alpha: int, candidates: np.ndarray,
              rng: np.random.Generator | None = None, budget: int | None = None) -> Iterator[list[tuple[int, ...]]]:
    """Solve the clause system row by row with forward checking.

    After each assignment, every row left as the only unset index of some
    clause has its domain filtered by that clause.  The next row is the one
    with the smallest domain; its values are tried in random order when
    ``rng`` is given.  ``budget`` caps the number of candidate tests.
    Single-row clauses are assumed to be applied to ``candidates`` already.
    """
    touching: list[list[Clause]] = [[] for _ in range(alpha)]
    for c in clauses:
        if len(set(c.idx)) > 1:
            for k in set(c.idx):
                touching[k].append(c)
    states: list = [None] * alpha
    spent = 0

    def charge(n: int) -> None:
        nonlocal spent
        spent += n
        if budget is not None and spent > budget:
            raise SearchExhausted(f"budget of {budget} candidate tests exhausted")

    def rec(domains: dict[int, np.ndarray]) -> Iterator[list[tuple[int, ...]]]:
        if not domains:
            yield [tuple(int(x) for x in s) for s in states]
            return
        k = min(domains, key=lambda r: (len(domains[r]), r))
        dom = domains[k]
        order = rng.permutation(len(dom)) if rng is not None else range(len(dom))
        rest = {r: d for r, d in domains.items() if r != k}
        for pos in order:
            charge(1)
            states[k] = tuple(int(x) for x in dom[pos])
            new = dict(rest)
            dead = False
            for u in rest:
                ready = [c for c in touching[u] if k in c.idx
                         and all(states[x] is not None for x in c.idx if x != u)]
                if ready:
                    charge(len(new[u]))
                    new[u] = _filter(new[u], u, ready, states)
                    if not len(new[u]):
                        dead = True
                        break
            if not dead:
                yield from rec(new)
            states[k] = None

    yield from rec({r: candidates for r in range(alpha)})


@lru_cache(maxsize=32)
def _row_candidates(family: str, m: int, alpha: int, shape: tuple) -> np.ndarray:
    return FAMILIES[family].row_candidates(m, alpha, **dict(shape))


def random_search(family: str, m: int, alpha: int, seed: int = 0, budget: int = 10**7, **shape):
    """First parameter set accepted by the family check.

    Deterministic for a given seed.  ``shape`` carries ``delta`` for reg24
    and ``delta2``/``delta3`` for reg36.  Raises SearchExhausted when the
    budget runs out or no solution exists.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    if budget <= 0:
        raise ValueError("budget must be positive")
    spec = FAMILIES[family]
    if alpha < spec.min_alpha:
        raise ValueError(f"{family} needs alpha >= {spec.min_alpha}")
    if set(shape) != set(spec.shape_keys):
        raise ValueError(f"{family} needs shape arguments {spec.shape_keys}, got {tuple(shape)}")
    if family == "reg36":
        bad = delta_violations(alpha, shape["delta2"], shape["delta3"])
        if bad:
            raise DeltaConditionError(f"diagonal offsets violate: {', '.join(bad)}")
    cands = _row_candidates(family, m, alpha, tuple(sorted(shape.items())))
    rng = np.random.default_rng(seed)
    for states in backtrack(spec.clauses(m, alpha, **shape), alpha, cands, rng, budget):
        params = spec.from_states(m, states, **shape)
        if not spec.check(params):
            raise AssertionError("search produced parameters rejected by the family check")
        return params
    raise SearchExhausted(f"no {family} parameters exist for m={m}, alpha={alpha}")


# exact Bresnan counting


@dataclass(frozen=True)
class BresnanSpace:
    """Row states passing the single-row conditions and the consecutive-row graph."""

    m: int
    states: np.ndarray
    transfer: np.ndarray

    @property
    def n_states(self) -> int:
        return len(self.states)


@lru_cache(maxsize=8)
def bresnan_space(m: int, chunk: int = 512) -> BresnanSpace:
    if m < 4:
        raise ValueError("m must be at least 4")
    st = FAMILIES["bresnan"].row_candidates(m, 4)
    n = len(st)
    t = np.zeros((n, n), dtype=bool)
    cols = _columns(st)
    y = tuple(c[None, :] for c in cols)
    for lo in range(0, n, chunk):
        x = tuple(c[lo:lo + chunk, None] for c in cols)
        ok = np.ones((min(chunk, n - lo), n), dtype=bool)
        for _, f in _bresnan_pair(m):
            ok &= f(x, y)
        t[lo:lo + chunk] = ok
    return BresnanSpace(m, st, t)


def _closed_walks(t: np.ndarray, rows: np.ndarray, alpha: int) -> np.ndarray:
    """Number of closed walks of length alpha from each state in rows."""
    tf = t.astype(np.float64)
    col_max = tf.sum(axis=0).max() if len(tf) else 0.0
    v = tf[rows]
    for _ in range(alpha - 1):
        if v.max(initial=0.0) * col_max >= _EXACT:
            raise OverflowError("walk counts exceed exact float range; use smaller alpha")
        v = v @ tf
    return np.rint(v[np.arange(len(rows)), rows]).astype(np.int64)


_WORKER_T: np.ndarray | None = None


def _init_worker(t: np.ndarray) -> None:
    global _WORKER_T
    _WORKER_T = t


def _worker(args: tuple[np.ndarray, int]) -> np.ndarray:
    rows, alpha = args
    assert _WORKER_T is not None
    return _closed_walks(_WORKER_T, rows, alpha)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QCGIRTH_JOBS", "1")))
    except ValueError:
        return 1


def closed_walk_diagonal(m: int, alpha: int, jobs: int | None = None,
                         progress: Callable[[int, int, int], None] | None = None) -> np.ndarray:
    """Solutions per first-row state: partitioned across workers by that state.

    ``progress(states_done, n_states, solutions_so_far)`` is called after
    each partition, in partition order.
    """
    sp = bresnan_space(m)
    n = sp.n_states
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    jobs = jobs or default_jobs()
    parts = np.array_split(np.arange(n), max(1, min(jobs * 4, n)))
    out, done, found = [], 0, 0

    def collect(res: Iterable[np.ndarray]) -> np.ndarray:
        nonlocal done, found
        for p, r in zip(parts, res):
            out.append(r)
            done += len(p)
            found += int(r.sum())
            if progress:
                progress(done, n, found)
        return np.concatenate(out)

    if jobs == 1:
        return collect(_closed_walks(sp.transfer, p, alpha) for p in parts)
    with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(sp.transfer,)) as ex:
        return collect(ex.map(_worker, [(p, alpha) for p in parts]))


def bresnan_count(m: int, alpha: int, jobs: int | None = None, progress=None) -> int:
    """Number of Bresnan parameter sets passing the girth-8 check.

    Every weight-2 polynomial is an ordered pair a < b in [0, m), and all
    2*alpha polynomials are free.
    """
    if alpha < 4:
        raise ValueError("alpha must be at least 4")
    return int(closed_walk_diagonal(m, alpha, jobs, progress).sum())


def _params(m: int, sp: BresnanSpace, walk: Sequence[int]) -> BresnanParams:
    return BresnanParams.from_states(m, [tuple(int(x) for x in sp.states[k]) for k in walk])


def bresnan_enumerate(m: int, alpha: int) -> Iterator[BresnanParams]:
    """All solutions, ordered by their row-state indices."""
    sp = bresnan_space(m)
    succ = [np.flatnonzero(r) for r in sp.transfer]
    tf = sp.transfer.astype(np.float32)
    # reach[k][y, x] is True iff some walk of k steps leads from y to x
    reach = [np.eye(sp.n_states, dtype=bool)]
    for _ in range(alpha):
        reach.append((tf @ reach[-1].astype(np.float32)) > 0)
    walk: list[int] = []

    def rec(x0: int) -> Iterator[BresnanParams]:
        d = len(walk)
        if d == alpha:
            yield _params(m, sp, walk)
            return
        for y in succ[walk[-1]]:
            if reach[alpha - d][y, x0]:
                walk.append(int(y))
                yield from rec(x0)
                walk.pop()

    for x0 in range(sp.n_states):
        if reach[alpha][x0, x0]:
            walk[:] = [x0]
            yield from rec(x0)


def bresnan_sample(m: int, alpha: int, n: int, seed: int = 0, jobs: int | None = None) -> list[BresnanParams]:
    """n independent uniform draws from the solution set."""
    sp = bresnan_space(m)
    diag = closed_walk_diagonal(m, alpha, jobs).astype(np.float64)
    total = diag.sum()
    if total == 0:
        raise SearchExhausted(f"no Bresnan parameters exist for m={m}, alpha={alpha}")
    rng = np.random.default_rng(seed)
    tf = sp.transfer.astype(np.float64)
    out = []
    for x0 in rng.choice(sp.n_states, size=n, p=diag / total):
        back = [np.zeros(sp.n_states)]
        back[0][x0] = 1.0
        for _ in range(alpha - 1):
            back.append(tf @ back[-1])
        walk = [int(x0)]
        for t in range(alpha - 1):
            w = tf[walk[-1]] * back[alpha - t - 1]
            walk.append(int(rng.choice(sp.n_states, p=w / w.sum())))
        out.append(_params(m, sp, walk))
    return out


def bresnan_search(m: int, alpha: int, mode: str = "count", *, n: int = 1, seed: int = 0,
                   jobs: int | None = None, progress=None):
    """Dispatch to count (int), enumerate (iterator) or sample (list of n)."""
    if m < 4 or alpha < 4:
        raise ValueError("m and alpha must be at least 4")
    if mode == "count":
        return bresnan_count(m, alpha, jobs, progress)
    if mode == "enumerate":
        return bresnan_enumerate(m, alpha)
    if mode == "sample":
        return bresnan_sample(m, alpha, n, seed, jobs)
    raise ValueError(f"unknown mode {mode!r}")
