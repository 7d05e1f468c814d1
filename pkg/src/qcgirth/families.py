"""The four code families: layouts and girth conditions.

Each family's girth theorem is a list of clauses over block rows.  A row
state is a flat tuple of exponents (weight-2 pairs as ``a, b``, then the
J exponent where the family has one).  A clause reads the states at a few
row indices and holds or fails; a parameter set passes iff every clause
holds.  Clause bodies use only modular arithmetic and ``&`` so that any
field may be a numpy array, which the searches use to test many
candidate rows at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Any, Callable, Sequence

import numpy as np

from .blockmatrix import BlockMatrix
from .circulant import CirculantSpec

RowState = tuple


@dataclass(frozen=True)
class Clause:
    cid: str
    idx: tuple[int, ...]
    test: Callable[..., Any] = field(compare=False, repr=False)

    def holds(self, states: Sequence[RowState]) -> bool:
        return bool(self.test(*(states[i] for i in self.idx)))


def _sep(a, b, m: int):
    d = (b - a) % m
    return np.minimum(d, m - d)


def _nz(x, m: int):
    return x % m != 0


def _avoid(m: int, values, forbidden):
    """No value is congruent to any forbidden value."""
    ok = True
    for v in values:
        for f in forbidden:
            ok = ok & _nz(v - f, m)
    return ok


def _pm(*xs):
    return [y for x in xs for y in (x, -x)]


def _eps_sums(*terms):
    """All sums sign * eps(p) for terms (sign, (a, b)) or (sign, e)."""
    choices = [[(sg, x) for x in (p if isinstance(p, tuple) else (p,))] for sg, p in terms]
    return [sum(sg * x for sg, x in pick) for pick in product(*choices)]


def _not_fraction(s, m: int, ks: Sequence[int]):
    ok = True
    for k in ks:
        if m % k == 0:
            ok = ok & (s != m // k)
    return ok


def _pair(spec: CirculantSpec, m: int, what: str) -> tuple[int, int]:
    if not isinstance(spec, CirculantSpec) or spec.weight != 2 or spec.m != m:
        raise ValueError(f"{what} must be a weight-2 circulant with m={m}")
    return spec.exponents  # type: ignore[return-value]


def _w2(m: int, a: int, b: int) -> CirculantSpec:
    return CirculantSpec(m, (int(a), int(b)))


# Bresnan codes


@dataclass(frozen=True)
class BresnanParams:
    m: int
    p1: tuple[CirculantSpec, ...]
    p2: tuple[CirculantSpec, ...]

    def __post_init__(self) -> None:
        if self.m < 4 or len(self.p1) < 4:
            raise ValueError("Bresnan codes need alpha >= 4 and m >= 4")
        if len(self.p1) != len(self.p2):
            raise ValueError("p1 and p2 must have the same length")
        for i, (a, b) in enumerate(zip(self.p1, self.p2)):
            _pair(a, self.m, f"p1[{i}]")
            _pair(b, self.m, f"p2[{i}]")

    @property
    def alpha(self) -> int:
        return len(self.p1)

    def states(self) -> list[RowState]:
        return [a.exponents + b.exponents for a, b in zip(self.p1, self.p2)]

    @classmethod
    def from_states(cls, m: int, states: Sequence[RowState]) -> BresnanParams:
        return cls(m, tuple(_w2(m, s[0], s[1]) for s in states), tuple(_w2(m, s[2], s[3]) for s in states))


def build_bresnan(p: BresnanParams) -> BlockMatrix:
    m, a = p.m, p.alpha
    ident = CirculantSpec.weight_one(m, 0)
    grid = [[CirculantSpec.zero(m)] * (2 * a) for _ in range(a)]
    for i in range(a):
        grid[i][i] = p.p1[i]
        grid[i][(i - 1) % a] = ident
        grid[i][a + i] = p.p2[i]
        grid[i][a + (i + 1) % a] = ident
    return BlockMatrix(m, grid, a, 2, 1)


def _bresnan_unary(m: int):
    def c1(x):
        return _not_fraction(_sep(x[0], x[1], m), m, (2, 3)) & _not_fraction(_sep(x[2], x[3], m), m, (2, 3))

    def c2(x):
        s1, s2 = _sep(x[0], x[1], m), _sep(x[2], x[3], m)
        return (s1 != s2) & _avoid(m, [s2], _pm(2 * s1)) & _avoid(m, [s1], _pm(2 * s2))

    return [("1", c1), ("2", c2)]


def _bresnan_pair(m: int):
    def c3_sep(x, y):
        s1x, s2x = _sep(x[0], x[1], m), _sep(x[2], x[3], m)
        s1y, s2y = _sep(y[0], y[1], m), _sep(y[2], y[3], m)
        return (s1x != s1y) & (s2x != s2y) & (s1x != s2y)

    def c3_zero(x, y):
        return _avoid(m, _eps_sums((1, (x[0], x[1])), (1, (y[2], y[3]))), [0])

    def c3_s(x, y):
        forb = _pm(_sep(x[0], x[1], m), _sep(x[2], x[3], m), _sep(y[0], y[1], m), _sep(y[2], y[3], m))
        return _avoid(m, _eps_sums((1, (x[0], x[1])), (1, (y[2], y[3]))), forb)

    return [("3.1", c3_sep), ("3.2", c3_zero), ("3.3", c3_s)]


def bresnan_clauses(m: int, alpha: int) -> list[Clause]:
    out = [Clause(cid, (i,), f) for i in range(alpha) for cid, f in _bresnan_unary(m)]
    out += [Clause(cid, (i, (i + 1) % alpha), f) for i in range(alpha) for cid, f in _bresnan_pair(m)]
    return out


def bresnan_violations(p: BresnanParams) -> list[tuple[str, tuple[int, ...]]]:
    st = p.states()
    return [(c.cid, c.idx) for c in bresnan_clauses(p.m, p.alpha) if not c.holds(st)]


def bresnan_check(p: BresnanParams) -> bool:
    """Girth >= 8 test for a Bresnan parameter set."""
    return not bresnan_violations(p)


# rate-2/3 codes


@dataclass(frozen=True)
class Rate23Params:
    m: int
    p1: tuple[CirculantSpec, ...]
    p2: tuple[CirculantSpec, ...]
    p3: tuple[CirculantSpec, ...]

    def __post_init__(self) -> None:
        if self.m < 3 or len(self.p1) <= 4:
            raise ValueError("rate-2/3 codes need alpha > 4 and m >= 3")
        if not len(self.p1) == len(self.p2) == len(self.p3):
            raise ValueError("p1, p2, p3 must have the same length")
        for c, vec in enumerate((self.p1, self.p2, self.p3), 1):
            for i, spec in enumerate(vec):
                _pair(spec, self.m, f"p{c}[{i}]")

    @property
    def alpha(self) -> int:
        return len(self.p1)

    def states(self) -> list[RowState]:
        return [a.exponents + b.exponents + c.exponents for a, b, c in zip(self.p1, self.p2, self.p3)]

    @classmethod
    def from_states(cls, m: int, states: Sequence[RowState]) -> Rate23Params:
        return cls(m, *(tuple(_w2(m, s[2 * c], s[2 * c + 1]) for s in states) for c in range(3)))


def build_rate23(p: Rate23Params) -> BlockMatrix:
    m, a = p.m, p.alpha
    ident = CirculantSpec.weight_one(m, 0)
    grid = [[CirculantSpec.zero(m)] * (3 * a) for _ in range(a)]
    for i in range(a):
        grid[i][i] = p.p1[i]
        grid[i][(i - 1) % a] = ident
        grid[i][a + i] = p.p2[i]
        grid[i][a + (i + 1) % a] = ident
        grid[i][2 * a + i] = p.p3[i]
        grid[i][2 * a + (i + 2) % a] = ident
    return BlockMatrix(m, grid, a, 3, 1)


def _polys3(x):
    return (x[0], x[1]), (x[2], x[3]), (x[4], x[5])


def _seps3(x, m):
    return [_sep(x[2 * c], x[2 * c + 1], m) for c in range(3)]


# In block c the H of row h shares its column with an identity in row h + _DISP[c].
_DISP = (1, -1, -2)


def _wrap_triangles(alpha: int) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]]:
    """Three columns closing a 6-cycle only because their offsets add up to a multiple of alpha.

    The listed 6-cycle conditions assume the row offsets of a triangle sum
    to zero; for alpha in {5, 6} they can also sum to +-alpha.  Returned as
    (H-row offsets from the first row, signs, blocks), one per triangle.
    """
    found: dict[frozenset, tuple] = {}
    for steps in product(range(3), (1, -1), range(3), (1, -1), range(3), (1, -1)):
        moves = [steps[2 * k + 1] * _DISP[steps[2 * k]] for k in range(3)]
        total = sum(moves)
        rows = [0, moves[0] % alpha, (moves[0] + moves[1]) % alpha]
        if total == 0 or total % alpha or len(set(rows)) < 3:
            continue
        offsets, signs, blocks = [], [], []
        for k in range(3):
            c, d = steps[2 * k], steps[2 * k + 1]
            h = rows[k] if d == 1 else rows[(k + 1) % 3]
            offsets.append(h)
            signs.append(d)
            blocks.append(c)
        key = frozenset(zip(blocks, offsets))
        low = min(offsets)
        found.setdefault(key, (tuple(o - low for o in offsets), tuple(signs), tuple(blocks)))
    out = []
    # one representative per cyclic row shift
    seen: set[frozenset] = set()
    for key, val in sorted(found.items(), key=lambda kv: kv[1]):
        shifts = {frozenset((c, (o + t) % alpha) for c, o in key) for t in range(alpha)}
        if not shifts & seen:
            seen |= shifts
            out.append(val)
    return out


def _triangle_test(m: int, signs: tuple[int, ...], blocks: tuple[int, ...]):
    def test(x, y, z):
        polys = [_polys3(s)[c] for s, c in zip((x, y, z), blocks)]
        return _avoid(m, _eps_sums(*zip(signs, polys)), [0])
    return test


def rate23_clauses(m: int, alpha: int) -> list[Clause]:
    def c1(x):
        ok = True
        for s in _seps3(x, m):
            ok = ok & _not_fraction(s, m, (2, 3))
        return ok

    def c2(x):
        s = _seps3(x, m)
        ok = True
        for c, d in combinations(range(3), 2):
            ok = ok & (s[c] != s[d]) & _avoid(m, [s[c]], _pm(2 * s[d])) & _avoid(m, [s[d]], _pm(2 * s[c]))
        return ok

    def c3(x):
        s1, s2, s3 = _seps3(x, m)
        return _avoid(m, [s1 + a * s2 + b * s3 for a in (1, -1) for b in (1, -1)], [0])

    def c41(x, y):
        return _avoid(m, _eps_sums((1, _polys3(x)[0]), (1, _polys3(y)[1])), [0])

    def c42(x, y):
        sx, sy = _seps3(x, m), _seps3(y, m)
        return _avoid(m, _eps_sums((1, _polys3(x)[0]), (1, _polys3(y)[1])), _pm(sx[0], sy[1]))

    def c43(x, y):
        sx, sy = _seps3(x, m), _seps3(y, m)
        return _avoid(m, _eps_sums((1, _polys3(x)[0]), (1, _polys3(y)[1])), _pm(sy[0], sx[1], sx[2], sy[2]))

    def c5(x, y, z):
        a, b, c = _seps3(x, m), _seps3(y, m), _seps3(z, m)
        ok = True
        for u, v in ((a[0], b[0]), (a[0], b[1]), (a[0], b[2]), (a[0], c[2]),
                     (a[1], b[1]), (a[1], c[2]), (a[2], c[2]), (a[2], b[1])):
            ok = ok & (u != v)
        return ok

    def c61(x, y, z):
        return _avoid(m, _eps_sums((1, _polys3(x)[0]), (1, _polys3(y)[0]), (1, _polys3(z)[2])), [0])

    def c62(x, y):
        return _avoid(m, _eps_sums((1, _polys3(x)[1]), (1, _polys3(y)[1]), (-1, _polys3(y)[2])), [0])

    def c63(x, y):
        return _avoid(m, _eps_sums((1, _polys3(x)[0]), (-1, _polys3(x)[1]), (1, _polys3(y)[2])), [0])

    def c64(x, z):
        return _avoid(m, _eps_sums((1, _polys3(x)[0]), (-1, _polys3(z)[1]), (1, _polys3(z)[2])), [0])

    out: list[Clause] = []
    for i in range(alpha):
        for offsets, signs, blocks in _wrap_triangles(alpha):
            out.append(Clause("W", tuple((i + o) % alpha for o in offsets), _triangle_test(m, signs, blocks)))
        i1, i2 = (i + 1) % alpha, (i + 2) % alpha
        out += [
            Clause("1", (i,), c1), Clause("2", (i,), c2), Clause("3", (i,), c3),
            Clause("4.1", (i, i1), c41), Clause("4.2", (i, i1), c42), Clause("4.3", (i, i1), c43),
            Clause("5", (i, i1, i2), c5),
            Clause("6.1", (i, i1, i2), c61), Clause("6.2", (i, i1), c62),
            Clause("6.3", (i, i1), c63), Clause("6.4", (i, i2), c64),
        ]
    return out


def rate23_violations(p: Rate23Params) -> list[tuple[str, tuple[int, ...]]]:
    st = p.states()
    return [(c.cid, c.idx) for c in rate23_clauses(p.m, p.alpha) if not c.holds(st)]


def rate23_check(p: Rate23Params) -> bool:
    """Girth == 8 test for a rate-2/3 parameter set."""
    return not rate23_violations(p)


# (2,4)-regular girth-10 codes


def _check_j_family(m: int, p: Sequence[CirculantSpec], e: Sequence[int]) -> None:
    if m < 3 or len(p) <= 4:
        raise ValueError("the girth-10 families need alpha > 4 and m >= 3")
    if len(e) != len(p):
        raise ValueError("need one J exponent per block row")
    for i, spec in enumerate(p):
        _pair(spec, m, f"p[{i}]")


@dataclass(frozen=True)
class Reg24Params:
    m: int
    p: tuple[CirculantSpec, ...]
    e: tuple[int, ...]
    delta: int

    def __post_init__(self) -> None:
        _check_j_family(self.m, self.p, self.e)
        if not 1 <= self.delta <= len(self.p) - 1:
            raise ValueError(f"delta must lie in [1, {len(self.p) - 1}]")
        object.__setattr__(self, "e", tuple(int(x) % self.m for x in self.e))

    @property
    def alpha(self) -> int:
        return len(self.p)

    def states(self) -> list[RowState]:
        return [s.exponents + (e,) for s, e in zip(self.p, self.e)]

    @classmethod
    def from_states(cls, m: int, states: Sequence[RowState], delta: int) -> Reg24Params:
        return cls(m, tuple(_w2(m, s[0], s[1]) for s in states), tuple(int(s[2]) for s in states), delta)


def build_reg24(p: Reg24Params) -> BlockMatrix:
    m, a = p.m, p.alpha
    grid = [[CirculantSpec.zero(m)] * (2 * a) for _ in range(a)]
    for i in range(a):
        grid[i][i] = p.p[i]
        grid[i][a + i] = CirculantSpec.weight_one(m, 0)
        grid[i][a + (i + p.delta) % a] = CirculantSpec.weight_one(m, p.e[i])
    return BlockMatrix(m, grid, a, 2, 1)


def reg24_clauses(m: int, alpha: int, delta: int) -> list[Clause]:
    def c1(x):
        return _not_fraction(_sep(x[0], x[1], m), m, (2, 3, 4))

    def c2(x, y):
        return _sep(x[0], x[1], m) != _sep(y[0], y[1], m)

    def c3(x, y):
        e = x[2] + y[2]
        a, b = _sep(x[0], x[1], m), _sep(y[0], y[1], m)
        return _avoid(m, [e], [0] + _pm(a, b, 2 * a, 2 * b, a + b, a - b)) & _nz(2 * e, m)

    def c4(x, y, z):
        return _avoid(m, [x[2] + y[2] + z[2]], [0] + _pm(_sep(x[0], x[1], m)))

    def c5(w, x, y, z):
        return _nz(w[2] + x[2] + y[2] + z[2], m)

    out: list[Clause] = []
    for i in range(alpha):
        k = [(i + t * delta) % alpha for t in range(4)]
        out.append(Clause("1", (i,), c1))
        out.append(Clause("2", (i, k[1]), c2))
        if (2 * delta) % alpha == 0:
            out.append(Clause("3", (i, k[1]), c3))
        if (3 * delta) % alpha == 0:
            out.append(Clause("4", (i, k[1], k[2]), c4))
        if (4 * delta) % alpha == 0 and (2 * delta) % alpha != 0:
            out.append(Clause("5", tuple(k), c5))
    return out


def reg24_violations(p: Reg24Params) -> list[tuple[str, tuple[int, ...]]]:
    st = p.states()
    return [(c.cid, c.idx) for c in reg24_clauses(p.m, p.alpha, p.delta) if not c.holds(st)]


def reg24_check(p: Reg24Params) -> bool:
    """Girth >= 10 test for a (2,4)-regular parameter set."""
    return not reg24_violations(p)


# (3,6)-regular girth-10 codes


class DeltaConditionError(ValueError):
    """The diagonal offsets fall outside the class the girth-10 theorem covers."""


@dataclass(frozen=True)
class Reg36Params:
    m: int
    p: tuple[CirculantSpec, ...]
    e: tuple[int, ...]
    delta2: int
    delta3: int

    def __post_init__(self) -> None:
        a = len(self.p)
        _check_j_family(self.m, self.p, self.e)
        if not (1 <= self.delta2 < a and 1 <= self.delta3 < a and self.delta2 != self.delta3):
            raise ValueError("delta2 and delta3 must be distinct values in [1, alpha-1]")
        object.__setattr__(self, "e", tuple(int(x) % self.m for x in self.e))

    @property
    def alpha(self) -> int:
        return len(self.p)

    @property
    def delta1(self) -> int:
        return self.alpha - 1

    @property
    def delta32(self) -> int:
        return (self.delta3 - self.delta2) % self.alpha

    def states(self) -> list[RowState]:
        return [s.exponents + (e,) for s, e in zip(self.p, self.e)]

    @classmethod
    def from_states(cls, m: int, states: Sequence[RowState], delta2: int, delta3: int) -> Reg36Params:
        return cls(m, tuple(_w2(m, s[0], s[1]) for s in states), tuple(int(s[2]) for s in states), delta2, delta3)


def build_reg36(p: Reg36Params) -> BlockMatrix:
    m, a = p.m, p.alpha
    ident = CirculantSpec.weight_one(m, 0)
    grid = [[CirculantSpec.zero(m)] * (2 * a) for _ in range(a)]
    for i in range(a):
        grid[i][i] = p.p[i]
        grid[i][(i - 1) % a] = ident
        grid[i][a + i] = CirculantSpec.weight_one(m, p.e[i])
        grid[i][a + (i + p.delta2) % a] = ident
        grid[i][a + (i + p.delta3) % a] = ident
    return BlockMatrix(m, grid, a, 2, 1)


_DEGENERATE = tuple(Fraction(n, d) for d in (2, 3, 4) for n in range(1, d))


def delta_violations(alpha: int, delta2: int, delta3: int) -> list[str]:
    """Which diagonal-offset conditions fail, as short labels.

    Offsets may repeat inside the three- and four-term sums, and delta1 takes
    part in both.  A sum only has to be nonzero when it does not cancel
    identically; delta2 + delta32 - delta3 always does.
    """
    vals = {"1": alpha - 1, "2": delta2 % alpha, "3": delta3 % alpha, "32": (delta3 - delta2) % alpha}
    formal = {"1": (1, 0, 0), "2": (0, 1, 0), "3": (0, 0, 1), "32": (0, -1, 1)}
    out: list[str] = []
    for x in ("2", "3", "32"):
        if vals[x] == 0 or Fraction(vals[x], alpha) in _DEGENERATE:
            out.append(f"1:{x}")
    for x, y in combinations(vals, 2):
        if (vals[x] - vals[y]) % alpha == 0 or (vals[x] + vals[y]) % alpha == 0:
            out.append(f"2:{x},{y}")
    for size in (3, 4):
        for combo in combinations_with_replacement(vals, size):
            for signs in product((1, -1), repeat=size - 1):
                sg = (1,) + signs
                num = sum(s * vals[k] for s, k in zip(sg, combo)) % alpha
                form = tuple(sum(s * formal[k][t] for s, k in zip(sg, combo)) for t in range(3))
                if num == 0 and any(form):
                    out.append(f"{size}:" + "".join(("+" if s > 0 else "-") + k for s, k in zip(sg, combo)))
    return out


def delta_class_ok(alpha: int, delta2: int, delta3: int) -> bool:
    return not delta_violations(alpha, delta2, delta3)


def valid_deltas(alpha: int) -> list[tuple[int, int]]:
    return [(d2, d3) for d2 in range(1, alpha) for d3 in range(1, alpha)
            if d2 != d3 and delta_class_ok(alpha, d2, d3)]


def reg36_clauses(m: int, alpha: int, delta2: int, delta3: int) -> list[Clause]:
    d32 = (delta3 - delta2) % alpha

    def c1(x):
        return _not_fraction(_sep(x[0], x[1], m), m, (2, 3, 4))

    def c3(x, y):
        return _sep(x[0], x[1], m) != _sep(y[0], y[1], m)

    def c22(x, y):
        return _avoid(m, [_sep(x[0], x[1], m)], _pm(2 * _sep(y[0], y[1], m)))

    def c23(x, y):
        return c22(y, x)

    def c41(x, y):
        return _nz(x[2] - y[2], m)

    def c42(x, y):
        return _avoid(m, [x[2] - y[2]], _pm(_sep(x[0], x[1], m), _sep(y[0], y[1], m)))

    def c43(x, y, z):
        return _avoid(m, [x[2] - y[2]], _pm(_sep(z[0], z[1], m)))

    def c51(x, y):
        return _avoid(m, _eps_sums((1, (x[0], x[1])), (-1, (y[0], y[1]))), [0])

    def c52(x, y, z):
        return _avoid(m, _eps_sums((1, (x[0], x[1])), (-1, (y[0], y[1])), (1, z[2]), (-1, x[2])), [0])

    out: list[Clause] = []
    for i in range(alpha):
        out.append(Clause("1", (i,), c1))
        prev = (i - 1) % alpha
        out += [Clause("2.1", (i, prev), c3), Clause("2.2", (i, prev), c22), Clause("2.3", (i, prev), c23)]
        for x, d in (("2", delta2), ("3", delta3), ("32", d32)):
            out.append(Clause(f"3.{x}", (i, (i + d) % alpha), c3))
        out.append(Clause("4.1", (i, (i + d32) % alpha), c41))
        out.append(Clause("4.2", (i, (i + d32) % alpha), c42))
        # the same triangle with the detour through the H of its apex row
        out.append(Clause("4.3", (i, (i + d32) % alpha, (i - delta2) % alpha), c43))
        out.append(Clause("5.1", (i, (i + d32) % alpha), c51))
        for x, d in (("2", delta2), ("3", delta3)):
            out.append(Clause(f"5.2.{x}", (i, (i - d) % alpha, (i + 1) % alpha), c52))
    return out


def reg36_violations(p: Reg36Params) -> list[tuple[str, tuple[int, ...]]]:
    bad = delta_violations(p.alpha, p.delta2, p.delta3)
    if bad:
        raise DeltaConditionError(f"diagonal offsets violate: {', '.join(bad)}")
    st = p.states()
    return [(c.cid, c.idx) for c in reg36_clauses(p.m, p.alpha, p.delta2, p.delta3) if not c.holds(st)]


def reg36_check(p: Reg36Params) -> bool:
    """Girth >= 10 test; raises DeltaConditionError outside the offset class."""
    return not reg36_violations(p)


# registry


def _pairs(m: int) -> np.ndarray:
    return np.array([(a, b) for a in range(m) for b in range(a + 1, m)], dtype=np.int64).reshape(-1, 2)


def _cross(*parts: np.ndarray) -> np.ndarray:
    """Cartesian product of row arrays, concatenated column-wise."""
    out = parts[0]
    for p in parts[1:]:
        out = np.hstack([np.repeat(out, len(p), axis=0), np.tile(p, (len(out), 1))])
    return out


def _pair_rows_by_sep(m: int) -> dict[int, np.ndarray]:
    pr = _pairs(m)
    s = _sep(pr[:, 0], pr[:, 1], m)
    return {int(v): pr[s == v] for v in np.unique(s)}


def _rows_from_seps(m: int, n_polys: int, unary: Sequence[Clause], extra: np.ndarray | None = None) -> np.ndarray:
    """Candidate rows whose separations pass the single-row clauses."""
    by_sep = _pair_rows_by_sep(m)
    blocks = []
    for combo in product(by_sep, repeat=n_polys):
        probe = tuple(int(x) for s in combo for x in by_sep[s][0])
        if extra is not None:
            probe += (0,)
        if all(c.test(probe) for c in unary):
            parts = [by_sep[s] for s in combo]
            if extra is not None:
                parts.append(extra)
            blocks.append(_cross(*parts))
    width = 2 * n_polys + (extra is not None)
    return np.vstack(blocks) if blocks else np.zeros((0, width), dtype=np.int64)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    clauses: Callable[..., list[Clause]]
    n_polys: int
    has_j: bool
    from_states: Callable[..., Any]
    build: Callable[..., BlockMatrix]
    check: Callable[..., bool]
    min_alpha: int
    target_girth: int
    exact: bool = False
    shape_keys: tuple[str, ...] = ()

    def row_candidates(self, m: int, alpha: int, **shape) -> np.ndarray:
        """All row states passing the single-row clauses (identical for every row)."""
        unary = [c for c in self.clauses(m, alpha, **shape) if c.idx == (0,)]
        extra = np.arange(m, dtype=np.int64).reshape(-1, 1) if self.has_j else None
        return _rows_from_seps(m, self.n_polys, unary, extra)


FAMILIES: dict[str, FamilySpec] = {
    "bresnan": FamilySpec("bresnan", bresnan_clauses, 2, False, BresnanParams.from_states,
                          build_bresnan, bresnan_check, 4, 8),
    "rate23": FamilySpec("rate23", rate23_clauses, 3, False, Rate23Params.from_states,
                         build_rate23, rate23_check, 5, 8, exact=True),
    "reg24": FamilySpec("reg24", reg24_clauses, 1, True, Reg24Params.from_states,
                        build_reg24, reg24_check, 5, 10, shape_keys=("delta",)),
    "reg36": FamilySpec("reg36", reg36_clauses, 1, True, Reg36Params.from_states,
                        build_reg36, reg36_check, 5, 10, shape_keys=("delta2", "delta3")),
}
