"""alist interchange and JSON code descriptions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .blockmatrix import BlockMatrix
from .circulant import CirculantSpec
from .families import FAMILIES
from .sparse import SparseBinaryMatrix

FORMAT_VERSION = 1


class AlistError(ValueError):
    """Base class for alist problems."""


class AlistParseError(AlistError):
    """Truncated text or a token that is not a nonnegative integer."""


class AlistWeightError(AlistError):
    """Declared weights disagree with the index lists or the max-weight line."""


class AlistConsistencyError(AlistError):
    """The column view and the row view describe different matrices."""


@dataclass(frozen=True)
class AlistDocument:
    n_cols: int
    n_rows: int
    max_col_weight: int
    max_row_weight: int
    col_weights: tuple[int, ...]
    row_weights: tuple[int, ...]
    col_lists: tuple[tuple[int, ...], ...]
    row_lists: tuple[tuple[int, ...], ...]

    @classmethod
    def from_matrix(cls, mat: SparseBinaryMatrix) -> AlistDocument:
        cw = tuple(len(c) for c in mat.cols)
        rw = tuple(len(r) for r in mat.rows)
        return cls(mat.n_cols, mat.n_rows, max(cw, default=0), max(rw, default=0), cw, rw,
                   tuple(tuple(r + 1 for r in c) for c in mat.cols),
                   tuple(tuple(c + 1 for c in r) for r in mat.rows))

    def to_text(self) -> str:
        def line(xs) -> str:
            return " ".join(str(x) for x in xs) if xs else "0"

        out = [f"{self.n_cols} {self.n_rows}", f"{self.max_col_weight} {self.max_row_weight}",
               line(self.col_weights), line(self.row_weights)]
        out += [line(c) for c in self.col_lists]
        out += [line(r) for r in self.row_lists]
        return "\n".join(out) + "\n"

    def to_matrix(self) -> SparseBinaryMatrix:
        if len(self.col_weights) != self.n_cols or len(self.row_weights) != self.n_rows:
            raise AlistWeightError("weight lists do not match the header dimensions")
        for what, ws, lists, mx in (("column", self.col_weights, self.col_lists, self.max_col_weight),
                                    ("row", self.row_weights, self.row_lists, self.max_row_weight)):
            if max(ws, default=0) != mx:
                raise AlistWeightError(f"max {what} weight {mx} but the largest listed weight is {max(ws, default=0)}")
            for k, (w, lst) in enumerate(zip(ws, lists)):
                if w != len(lst):
                    raise AlistWeightError(f"{what} {k + 1}: weight {w} but {len(lst)} indices")
        from_cols = set()
        for c, lst in enumerate(self.col_lists):
            for r in lst:
                if not 1 <= r <= self.n_rows:
                    raise AlistConsistencyError(f"column {c + 1} lists row {r} outside 1..{self.n_rows}")
                from_cols.add((r - 1, c))
        from_rows = set()
        for r, lst in enumerate(self.row_lists):
            for c in lst:
                if not 1 <= c <= self.n_cols:
                    raise AlistConsistencyError(f"row {r + 1} lists column {c} outside 1..{self.n_cols}")
                from_rows.add((r, c - 1))
        if len(from_cols) != sum(self.col_weights) or len(from_rows) != sum(self.row_weights):
            raise AlistConsistencyError("repeated index in an index list")
        if from_cols != from_rows:
            r, c = min(from_cols ^ from_rows)
            raise AlistConsistencyError(f"entry (row {r + 1}, column {c + 1}) appears in only one view")
        rows: list[list[int]] = [[] for _ in range(self.n_rows)]
        for r, c in from_rows:
            rows[r].append(c)
        return SparseBinaryMatrix.from_rows(self.n_rows, self.n_cols, rows)


def export_alist(mat: SparseBinaryMatrix) -> str:
    """Canonical alist text: unpadded index lists, an empty list written as 0."""
    return AlistDocument.from_matrix(mat).to_text()


def _ints(line: str, lineno: int) -> list[int]:
    try:
        vals = [int(t) for t in line.split()]
    except ValueError as exc:
        raise AlistParseError(f"line {lineno}: {exc}") from None
    if any(v < 0 for v in vals):
        raise AlistParseError(f"line {lineno}: negative number")
    return vals


def parse_alist(text: str) -> AlistDocument:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()

    def take(k: int, n: int | None = None) -> list[int]:
        if k >= len(lines):
            raise AlistParseError(f"truncated: expected at least {k + 1} lines, got {len(lines)}")
        vals = _ints(lines[k], k + 1)
        if n is not None and len(vals) != n:
            raise AlistParseError(f"line {k + 1}: expected {n} numbers, got {len(vals)}")
        return vals

    n_cols, n_rows = take(0, 2)
    mc, mr = take(1, 2)
    cw = take(2)
    rw = take(3)
    # a lone 0 stands for an empty list; zero padding is dropped
    cw = [] if n_cols == 0 else cw
    rw = [] if n_rows == 0 else rw
    if len(cw) != n_cols or len(rw) != n_rows:
        raise AlistWeightError(f"expected {n_cols} column and {n_rows} row weights, got {len(cw)} and {len(rw)}")
    cols = [tuple(v for v in take(4 + j) if v) for j in range(n_cols)]
    rows = [tuple(v for v in take(4 + n_cols + i) if v) for i in range(n_rows)]
    if len(lines) > 4 + n_cols + n_rows:
        raise AlistParseError(f"unexpected content after line {4 + n_cols + n_rows}")
    return AlistDocument(n_cols, n_rows, mc, mr, tuple(cw), tuple(rw), tuple(cols), tuple(rows))


def import_alist(text: str) -> SparseBinaryMatrix:
    return parse_alist(text).to_matrix()


# JSON code descriptions


class CodeFormatError(ValueError):
    pass


def _block_json(spec: CirculantSpec) -> dict[str, Any]:
    return {"kind": spec.kind, "exponents": list(spec.exponents)}


def code_to_json(bm: BlockMatrix, family: str | None = None, params=None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "family": family, "version": FORMAT_VERSION,
        "m": bm.m, "alpha": bm.alpha, "beta": bm.beta, "gamma": bm.gamma,
        "blocks": [[_block_json(s) for s in row] for row in bm.grid],
    }
    if params is not None:
        if family not in FAMILIES:
            raise ValueError(f"params need a known family, got {family!r}")
        doc["params"] = {"states": [list(s) for s in params.states()],
                         **{k: getattr(params, k) for k in FAMILIES[family].shape_keys}}
    return doc


def dumps_code(bm: BlockMatrix, family: str | None = None, params=None) -> str:
    return json.dumps(code_to_json(bm, family, params), indent=1) + "\n"


def _block_from_json(m: int, d: Any) -> CirculantSpec:
    if not isinstance(d, dict) or "exponents" not in d:
        raise CodeFormatError(f"block must be an object with 'exponents', got {d!r}")
    spec = CirculantSpec(m, tuple(int(e) for e in d["exponents"]))
    if "kind" in d and d["kind"] != spec.kind:
        raise CodeFormatError(f"block kind {d['kind']!r} does not match exponents {d['exponents']}")
    return spec


def code_from_json(doc: dict[str, Any]) -> tuple[BlockMatrix, str | None, Any]:
    """Returns (block matrix, family name or None, family params or None)."""
    try:
        version = doc.get("version", FORMAT_VERSION)
        if version > FORMAT_VERSION:
            raise CodeFormatError(f"format version {version} is newer than supported {FORMAT_VERSION}")
        m = int(doc["m"])
        grid = [[_block_from_json(m, b) for b in row] for row in doc["blocks"]]
        bm = BlockMatrix(m, grid, int(doc.get("alpha", 1)), int(doc.get("beta", 1)), int(doc.get("gamma", 1)))
    except (KeyError, TypeError, AttributeError) as exc:
        raise CodeFormatError(f"malformed code description: {exc!r}") from None
    except ValueError as exc:
        raise CodeFormatError(str(exc)) from None
    family = doc.get("family")
    params = None
    if doc.get("params") is not None:
        if family not in FAMILIES:
            raise CodeFormatError(f"params given for unknown family {family!r}")
        spec = FAMILIES[family]
        pd = doc["params"]
        params = spec.from_states(m, [tuple(s) for s in pd["states"]], **{k: pd[k] for k in spec.shape_keys})
        if spec.build(params) != bm:
            raise CodeFormatError("blocks do not match the family parameters")
    return bm, family, params


def loads_code(text: str) -> tuple[BlockMatrix, str | None, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise CodeFormatError("code description must be a JSON object")
    return code_from_json(doc)


def blocks_from_matrix(mat: SparseBinaryMatrix, m: int, alpha: int = 1) -> BlockMatrix:
    """Recover the circulant grid of a matrix built from m x m circulants."""
    if m < 1 or mat.n_rows % m or mat.n_cols % m:
        raise ValueError(f"{mat.n_rows}x{mat.n_cols} matrix does not tile into {m}x{m} blocks")
    nbr, nbc = mat.n_rows // m, mat.n_cols // m
    grid = []
    for i in range(nbr):
        row = []
        for j in range(nbc):
            first = tuple(c - j * m for c in mat.rows[i * m] if j * m <= c < (j + 1) * m)
            try:
                spec = CirculantSpec(m, first)
            except ValueError as exc:
                raise ValueError(f"block ({i + 1}, {j + 1}): {exc}") from None
            for r in range(1, m):
                got = tuple(c - j * m for c in mat.rows[i * m + r] if j * m <= c < (j + 1) * m)
                if got != tuple(sorted((r + e) % m for e in spec.exponents)):
                    raise ValueError(f"block ({i + 1}, {j + 1}) is not circulant")
            row.append(spec)
        grid.append(row)
    if nbr % alpha or nbc % alpha:
        raise ValueError(f"block grid {nbr}x{nbc} is not a multiple of alpha={alpha}")
    return BlockMatrix(m, grid, alpha, nbc // alpha, nbr // alpha)
