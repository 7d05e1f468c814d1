"""Block grids of circulants and their expansion."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .circulant import CirculantSpec, expand
from .sparse import SparseBinaryMatrix

Grid = tuple[tuple[CirculantSpec, ...], ...]


@dataclass(frozen=True)
class BlockMatrix:
    """A (gamma*alpha) x (beta*alpha) grid of m x m circulants."""

    m: int
    grid: Grid
    alpha: int = 1
    beta: int = 1
    gamma: int = 1

    def __post_init__(self) -> None:
        grid = tuple(tuple(row) for row in self.grid)
        if not grid or not grid[0]:
            raise ValueError("empty grid")
        if any(len(row) != len(grid[0]) for row in grid):
            raise ValueError("ragged grid")
        if len(grid) != self.gamma * self.alpha or len(grid[0]) != self.beta * self.alpha:
            raise ValueError(
                f"grid is {len(grid)}x{len(grid[0])}, expected "
                f"{self.gamma * self.alpha}x{self.beta * self.alpha} for alpha={self.alpha}, "
                f"beta={self.beta}, gamma={self.gamma}"
            )
        for row in grid:
            for spec in row:
                if not isinstance(spec, CirculantSpec):
                    raise TypeError(f"grid cells must be CirculantSpec, got {type(spec).__name__}")
                if spec.m != self.m:
                    raise ValueError(f"mixed moduli: block has m={spec.m}, matrix m={self.m}")
        object.__setattr__(self, "grid", grid)

    @property
    def n_block_rows(self) -> int:
        return len(self.grid)

    @property
    def n_block_cols(self) -> int:
        return len(self.grid[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_block_rows * self.m, self.n_block_cols * self.m

    @property
    def designed_rate(self) -> float | None:
        if self.beta > self.gamma:
            return (self.beta - self.gamma) / self.beta
        return None

    def __getitem__(self, ij: tuple[int, int]) -> CirculantSpec:
        i, j = ij
        return self.grid[i][j]

    def nonzero_blocks(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.grid) for j, s in enumerate(row) if not s.is_zero]

    @property
    def is_degenerate(self) -> bool:
        """All-zero, or some block row / block column is entirely zero."""
        if not self.nonzero_blocks():
            return True
        if any(all(s.is_zero for s in row) for row in self.grid):
            return True
        return any(all(row[j].is_zero for row in self.grid) for j in range(self.n_block_cols))

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> BlockMatrix:
        return BlockMatrix(self.m, tuple(tuple(self.grid[i][j] for j in cols) for i in rows), 1, len(cols), len(rows))


def assemble(grid: Sequence[Sequence[CirculantSpec]], alpha: int = 1, beta: int | None = None, gamma: int | None = None) -> BlockMatrix:
    """Validate a grid; beta and gamma default to the grid shape over alpha."""
    grid = tuple(tuple(r) for r in grid)
    if not grid or not grid[0]:
        raise ValueError("empty grid")
    if gamma is None:
        gamma, rem = divmod(len(grid), alpha)
        if rem:
            raise ValueError(f"{len(grid)} block rows is not a multiple of alpha={alpha}")
    if beta is None:
        beta, rem = divmod(len(grid[0]), alpha)
        if rem:
            raise ValueError(f"{len(grid[0])} block columns is not a multiple of alpha={alpha}")
    m = grid[0][0].m
    bm = BlockMatrix(m, grid, alpha, beta, gamma)
    if bm.is_degenerate:
        warnings.warn("degenerate block matrix (a zero block row or column)", stacklevel=2)
    return bm


def expand_block(bm: BlockMatrix) -> SparseBinaryMatrix:
    m = bm.m
    rows: list[list[int]] = [[] for _ in range(bm.shape[0])]
    for i, brow in enumerate(bm.grid):
        for j, spec in enumerate(brow):
            if spec.is_zero:
                continue
            for r, cols in enumerate(expand(spec)):
                rows[i * m + r].extend(j * m + c for c in cols)
    return SparseBinaryMatrix(bm.shape[0], bm.shape[1], tuple(tuple(sorted(r)) for r in rows))


@dataclass(frozen=True)
class DecompositionMinor:
    parent: BlockMatrix
    row_index_set: tuple[int, ...]
    col_index_set: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.row_index_set or not self.col_index_set:
            raise ValueError("index sets must be nonempty")
        if not all(0 <= i < self.parent.n_block_rows for i in self.row_index_set):
            raise ValueError("row index out of range")
        if not all(0 <= j < self.parent.n_block_cols for j in self.col_index_set):
            raise ValueError("column index out of range")

    def as_block_matrix(self) -> BlockMatrix:
        return self.parent.minor(self.row_index_set, self.col_index_set)
