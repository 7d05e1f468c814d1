"""Sparse binary matrices kept as sorted per-row column lists."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class SparseBinaryMatrix:
    n_rows: int
    n_cols: int
    rows: tuple[tuple[int, ...], ...]
    cols: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.rows) != self.n_rows:
            raise ValueError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        cols: list[list[int]] = [[] for _ in range(self.n_cols)]
        for r, row in enumerate(self.rows):
            prev = -1
            for c in row:
                if not prev < c < self.n_cols:
                    raise ValueError(f"row {r}: column indices must be strictly increasing in [0, {self.n_cols})")
                prev = c
                cols[c].append(r)
        object.__setattr__(self, "cols", tuple(tuple(c) for c in cols))

    @classmethod
    def from_rows(cls, n_rows: int, n_cols: int, rows: Iterable[Iterable[int]]) -> SparseBinaryMatrix:
        return cls(n_rows, n_cols, tuple(tuple(sorted(set(r))) for r in rows))

    @classmethod
    def from_dense(cls, a) -> SparseBinaryMatrix:
        a = np.asarray(a)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        rows = tuple(tuple(int(c) for c in np.flatnonzero(r % 2)) for r in a)
        return cls(a.shape[0], a.shape[1], rows)

    @classmethod
    def identity(cls, n: int) -> SparseBinaryMatrix:
        return cls(n, n, tuple((i,) for i in range(n)))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for r, row in enumerate(self.rows):
            out[r, list(row)] = 1
        return out

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> list[tuple[int, int]]:
        return [(r, c) for r, row in enumerate(self.rows) for c in row]

    def transpose(self) -> SparseBinaryMatrix:
        return SparseBinaryMatrix(self.n_cols, self.n_rows, self.cols)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> SparseBinaryMatrix:
        cmap = {c: j for j, c in enumerate(col_idx)}
        rows = [sorted(cmap[c] for c in self.rows[r] if c in cmap) for r in row_idx]
        return SparseBinaryMatrix(len(row_idx), len(col_idx), tuple(tuple(r) for r in rows))

    def syndrome(self, bits) -> np.ndarray:
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.shape != (self.n_cols,):
            raise ValueError(f"expected {self.n_cols} bits, got shape {bits.shape}")
        return np.array([int(bits[list(row)].sum()) & 1 if row else 0 for row in self.rows], dtype=np.uint8)


def gf2_rank(mat: SparseBinaryMatrix) -> int:
    """Rank over GF(2) by elimination on int-packed rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in mat.rows:
        v = 0
        for c in row:
            v |= 1 << c
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                rank += 1
                break
            v ^= p
    return rank


def row_col_weight_profile(mat: SparseBinaryMatrix) -> tuple[list[int], list[int]]:
    return [len(r) for r in mat.rows], [len(c) for c in mat.cols]


def is_regular(mat: SparseBinaryMatrix, col_weight: int, row_weight: int) -> bool:
    rw, cw = row_col_weight_profile(mat)
    return all(w == row_weight for w in rw) and all(w == col_weight for w in cw)
