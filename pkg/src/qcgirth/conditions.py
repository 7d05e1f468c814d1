"""Exponent/separation conditions for 4-, 6- and 8-cycles in circulant grids.

A cycle of length 2s in the expanded matrix is the lift of a closed walk
over the block grid: from a check in block row r it enters block column c
through exponent e_out of block (r, c) and leaves through exponent e_in of
block (r', c).  The walk closes iff sum(e_out - e_in) = 0 mod m, and the
lift is a simple cycle iff its s checks and s bits are pairwise distinct.
Every violation is tagged with the catalog item its point counts realise.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .blockmatrix import BlockMatrix
from .catalog import canonical_grid, parse_grid
from .circulant import separation


@dataclass(frozen=True)
class Step:
    """One check -> bit -> check hop through block column ``col``."""

    row: int
    col: int
    e_out: int
    next_row: int
    e_in: int

    @property
    def delta(self) -> int:
        return self.e_out - self.e_in


Walk = tuple[Step, ...]


def _validate_walk(walk: Sequence[Step], bm: BlockMatrix | None) -> None:
    if len(walk) < 2:
        raise ValueError("a closed walk needs at least two steps")
    for k, st in enumerate(walk):
        nxt = walk[(k + 1) % len(walk)]
        if st.next_row != nxt.row:
            raise ValueError(f"step {k} ends in block row {st.next_row} but step {k + 1} starts in {nxt.row}")
        if bm is not None:
            if st.e_out % bm.m not in bm[st.row, st.col].exponents:
                raise ValueError(f"step {k}: {st.e_out} is not an exponent of block ({st.row},{st.col})")
            if st.e_in % bm.m not in bm[st.next_row, st.col].exponents:
                raise ValueError(f"step {k}: {st.e_in} is not an exponent of block ({st.next_row},{st.col})")


def fan_condition(walk: Sequence[Step], m: int, bm: BlockMatrix | None = None) -> bool:
    """Closure of a block walk: sum of (e_out - e_in) is 0 mod m."""
    _validate_walk(walk, bm)
    return sum(st.delta for st in walk) % m == 0


def walk_vertices(walk: Sequence[Step], m: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Check and bit vertices (block, offset) of the lift starting at offset 0."""
    checks, bits = [], []
    x = 0
    for st in walk:
        checks.append((st.row, x))
        bits.append((st.col, (x + st.e_out) % m))
        x = (x + st.delta) % m
    return checks, bits


def is_simple_lift(walk: Sequence[Step], m: int) -> bool:
    checks, bits = walk_vertices(walk, m)
    return len(set(checks)) == len(checks) and len(set(bits)) == len(bits)


def walk_points(walk: Sequence[Step]) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = defaultdict(int)
    for st in walk:
        out[st.row, st.col] += 1
        out[st.next_row, st.col] += 1
    return dict(out)


def walk_configuration(walk: Sequence[Step]) -> tuple[tuple[int, ...], ...]:
    pts = walk_points(walk)
    rows = sorted({r for r, _ in pts})
    cols = sorted({c for _, c in pts})
    return canonical_grid([[pts.get((r, c), 0) for c in cols] for r in rows])


# catalog items as printed for each cycle length
_ITEM_GRIDS = {
    4: ["|4|", "|2 2|", "|1 1;1 1|"],
    6: ["|6|", "|4 2|", "|2 2 2|", "|2 2;0 2|", "|3 1;1 1|", "|2 1 1;0 1 1|", "|1 1 0;1 0 1;0 1 1|"],
    8: [
        "|8|", "|5 1;1 1|", "|4 2;0 2|", "|3 1;1 3|", "|2 2;2 2|", "|4 1 1;0 1 1|",
        "|3 0 1;1 2 1|", "|2 1 1;2 1 1|", "|2 2 0;0 2 2|", "|2 0 1 1;0 2 1 1|",
        "|1 1 1 1;1 1 1 1|", "|3 1 0;1 0 1;0 1 1|", "|2 1 1;2 0 0;0 1 1|",
        "|2 1 1;1 1 0;1 0 1|", "|2 0 0;1 1 0;1 1 2|", "|1 1 1 1;1 1 0 0;0 0 1 1|",
        "|2 1 1 0;0 1 0 1;0 0 1 1|", "|1 1 0 0;1 0 1 0;0 1 0 1;0 0 1 1|",
    ],
}
ITEM_IDS: dict[int, dict[tuple, str]] = {
    n: {canonical_grid(parse_grid(g)): f"{n}.{k + 1}" for k, g in enumerate(grids)}
    for n, grids in _ITEM_GRIDS.items()
}
LEMMA_2C = "8.2C"


def classify(walk: Sequence[Step]) -> str:
    n = 2 * len(walk)
    cfg = walk_configuration(walk)
    item = ITEM_IDS.get(n, {}).get(cfg)
    if item is not None:
        return item
    # two weight-2 blocks sharing a line: covered by the 2C lemma
    return LEMMA_2C if n == 8 else f"{n}.?"


@dataclass(frozen=True)
class Violation:
    cycle_length: int
    condition_id: str
    blocks: tuple[tuple[int, int], ...]
    witness: dict = field(compare=False, hash=False)

    def as_dict(self) -> dict:
        return {
            "cycle_length": self.cycle_length,
            "condition_id": self.condition_id,
            "blocks": [list(b) for b in self.blocks],
            "witness": self.witness,
        }


@dataclass
class ConditionReport:
    m: int
    violations: list[Violation] = field(default_factory=list)
    degenerate: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:  # truthy when something was violated
        return bool(self.violations)

    def ids(self) -> set[str]:
        return {v.condition_id for v in self.violations}

    def lengths(self) -> set[int]:
        return {v.cycle_length for v in self.violations}

    def extend(self, other: ConditionReport) -> None:
        self.violations.extend(other.violations)
        self.degenerate = self.degenerate or other.degenerate

    def sort(self) -> None:
        self.violations.sort(key=lambda v: (v.cycle_length, v.condition_id, v.blocks))

    def as_dict(self) -> dict:
        return {"m": self.m, "ok": self.ok, "degenerate": self.degenerate,
                "violations": [v.as_dict() for v in self.violations]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


def witness_holds(v: Violation, m: int) -> bool:
    """Re-evaluate the congruence recorded in a witness."""
    return sum(v.witness["terms"]) % m == 0


# the walk engine

_Move = tuple[int, int, int, int, int]  # col, e_out, next_row, e_in, delta


def _moves(bm: BlockMatrix) -> list[list[_Move]]:
    out: list[list[_Move]] = [[] for _ in range(bm.n_block_rows)]
    col_blocks: list[list[int]] = [[] for _ in range(bm.n_block_cols)]
    for i, j in bm.nonzero_blocks():
        col_blocks[j].append(i)
    for i, j in bm.nonzero_blocks():
        for eo in bm[i, j].exponents:
            for i2 in col_blocks[j]:
                for ei in bm[i2, j].exponents:
                    if i2 == i and ei == eo:
                        continue
                    out[i].append((j, eo, i2, ei, eo - ei))
    return out


def _paths(moves, start: int, length: int, min_row: int, m: int) -> Iterator[tuple[tuple[_Move, ...], int]]:
    """Walk prefixes from (start, 0) with internally distinct vertices."""

    def rec(row: int, x: int, acc: list[_Move], checks: set, bits: set):
        if len(acc) == length:
            yield tuple(acc), row, x
            return
        for mv in moves[row]:
            col, eo, r2, _, d = mv
            if r2 < min_row:
                continue
            bit = (col, (x + eo) % m)
            if bit in bits:
                continue
            x2 = (x + d) % m
            nxt = (r2, x2)
            if len(acc) + 1 < length and nxt in checks:
                continue
            acc.append(mv)
            bits.add(bit)
            added = nxt not in checks and len(acc) < length
            if added:
                checks.add(nxt)
            yield from rec(r2, x2, acc, checks, bits)
            if added:
                checks.discard(nxt)
            bits.discard(bit)
            acc.pop()

    yield from rec(start, 0, [], {(start, 0)}, set())


def iter_cycle_walks(bm: BlockMatrix, length: int) -> Iterator[Walk]:
    """Block walks whose lift is a simple cycle of exactly ``length``.

    Each cycle is produced at least once (from its smallest block row,
    lifted so that its first check sits at offset 0); some are produced
    several times.
    """
    if length % 2 or length < 4:
        raise ValueError("cycle length must be even and at least 4")
    s = length // 2
    m = bm.m
    moves = _moves(bm)
    h = (s + 1) // 2
    for r0 in range(bm.n_block_rows):
        suffix: dict[tuple[int, int], list[tuple[_Move, ...]]] = defaultdict(list)
        for r in range(r0, bm.n_block_rows):
            for path, end, x in _paths(moves, r, s - h, r0, m):
                if end == r0:
                    suffix[r, x].append(path)
        for prefix, end, x in _paths(moves, r0, h, r0, m):
            for tail in suffix.get((end, (-x) % m), ()):
                full = prefix + tail
                steps = []
                row = r0
                for col, eo, r2, ei, _ in full:
                    steps.append(Step(row, col, eo, r2, ei))
                    row = r2
                walk = tuple(steps)
                if is_simple_lift(walk, m):
                    yield walk


def _violation_from_walk(walk: Walk, bm: BlockMatrix) -> Violation:
    blocks = tuple(sorted({(st.row + 1, st.col + 1) for st in walk} | {(st.next_row + 1, st.col + 1) for st in walk}))
    terms = []
    for st in walk:
        terms += [st.e_out, -st.e_in]
    seps = {}
    for st in walk:
        for r in (st.row, st.next_row):
            spec = bm[r, st.col]
            if spec.weight == 2:
                seps[f"{r + 1},{st.col + 1}"] = separation(spec)
    witness = {
        "walk": [[st.row + 1, st.col + 1, st.e_out, st.next_row + 1, st.e_in] for st in walk],
        "terms": terms,
        "congruence": " + ".join(f"({st.e_out} - {st.e_in})" for st in walk) + f" = 0 mod {bm.m}",
        "separations": seps,
    }
    return Violation(2 * len(walk), classify(walk), blocks, witness)


def _scan(bm: BlockMatrix, length: int, first_only: bool) -> ConditionReport:
    report = ConditionReport(bm.m, degenerate=bm.is_degenerate)
    seen = set()
    for walk in iter_cycle_walks(bm, length):
        v = _violation_from_walk(walk, bm)
        key = (v.condition_id, v.blocks)
        if key in seen:
            continue
        seen.add(key)
        report.violations.append(v)
        if first_only:
            break
    report.sort()
    return report


def check_4cycles(bm: BlockMatrix, first_only: bool = False) -> ConditionReport:
    """4-cycles: s = m/2 (4.1), equal separations in a line (4.2), 2x2 minors (4.3)."""
    return _scan(bm, 4, first_only)


def check_6cycles(bm: BlockMatrix, first_only: bool = False) -> ConditionReport:
    return _scan(bm, 6, first_only)


def two_c_pairs(bm: BlockMatrix) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs of weight-2 blocks sharing a block row or block column."""
    heavy = [(i, j) for i, j in bm.nonzero_blocks() if bm[i, j].weight == 2]
    return [(a, b) for a, b in combinations(heavy, 2) if a[0] == b[0] or a[1] == b[1]]


def lemma_2c_report(bm: BlockMatrix) -> ConditionReport:
    report = ConditionReport(bm.m, degenerate=bm.is_degenerate)
    for a, b in two_c_pairs(bm):
        s1, s2 = separation(bm[a]), separation(bm[b])
        report.violations.append(Violation(
            8, LEMMA_2C, ((a[0] + 1, a[1] + 1), (b[0] + 1, b[1] + 1)),
            {"terms": [s1, -s1, s2, -s2], "congruence": f"{s1} - {s1} + {s2} - {s2} = 0 mod {bm.m}",
             "separations": {f"{a[0] + 1},{a[1] + 1}": s1, f"{b[0] + 1},{b[1] + 1}": s2}},
        ))
    return report


def check_8cycles(bm: BlockMatrix, first_only: bool = False, exhaustive: bool = True) -> ConditionReport:
    """Lemma 2C first, then every 8-cycle item.

    With ``exhaustive=False`` the item scan is skipped when the lemma already
    fires.
    """
    report = lemma_2c_report(bm)
    if report.violations and (first_only or not exhaustive):
        return report
    report.extend(_scan(bm, 8, first_only))
    report.sort()
    return report


def certify_girth_at_least(bm: BlockMatrix, target: int) -> tuple[bool, ConditionReport]:
    """True iff no cycle shorter than ``target`` exists, with the evidence."""
    if target not in (6, 8, 10):
        raise ValueError("target girth must be 6, 8 or 10")
    report = ConditionReport(bm.m, degenerate=bm.is_degenerate)
    if target == 10:
        lemma = lemma_2c_report(bm)
        if lemma.violations:
            return False, lemma
    checks = [check_4cycles, check_6cycles, check_8cycles][: (target - 4) // 2]
    for check in checks:
        report.extend(check(bm, first_only=True))
        if report.violations:
            break
    report.sort()
    return report.ok, report


def full_report(bm: BlockMatrix, max_len: int = 8) -> ConditionReport:
    report = ConditionReport(bm.m, degenerate=bm.is_degenerate)
    for n, check in ((4, check_4cycles), (6, check_6cycles), (8, check_8cycles)):
        if n <= max_len:
            report.extend(check(bm))
    report.sort()
    return report
