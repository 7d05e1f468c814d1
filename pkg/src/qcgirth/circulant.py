"""Circulant atoms over Z2[x]/(x^m+1): separation, expansion, girth, GF(2)[x] gcd."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

ZERO, WEIGHT_ONE, WEIGHT_TWO = "zero", "weight1", "weight2"


@dataclass(frozen=True, order=True)
class CirculantSpec:
    """An m x m circulant given by the exponents of its first-row polynomial.

    ``exponents`` is empty for the zero block, a single exponent for a
    weight-1 block and a sorted pair ``(a, b)`` with ``a < b`` for a
    weight-2 block.
    """

    m: int
    exponents: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"modulus must be positive, got {self.m}")
        exps = tuple(sorted({int(e) % self.m for e in self.exponents}))
        if len(exps) != len(self.exponents):
            raise ValueError(f"repeated exponent mod {self.m}: {self.exponents}")
        if len(exps) > 2:
            raise ValueError("only zero, weight-1 and weight-2 circulants are supported")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def zero(cls, m: int) -> CirculantSpec:
        return cls(m, ())

    @classmethod
    def weight_one(cls, m: int, e: int) -> CirculantSpec:
        return cls(m, (e,))

    @classmethod
    def weight_two(cls, m: int, a: int, b: int) -> CirculantSpec:
        if (a - b) % m == 0:
            raise ValueError(f"weight-2 circulant needs distinct exponents mod {m}")
        return cls(m, (a, b))

    @property
    def weight(self) -> int:
        return len(self.exponents)

    @property
    def kind(self) -> str:
        return (ZERO, WEIGHT_ONE, WEIGHT_TWO)[self.weight]

    @property
    def is_zero(self) -> bool:
        return not self.exponents

    def shifted(self, k: int) -> CirculantSpec:
        """Multiply the polynomial by x^k."""
        return CirculantSpec(self.m, tuple(e + k for e in self.exponents))

    def to_poly(self) -> int:
        """Bit-packed polynomial; bit e set iff x^e is a term."""
        out = 0
        for e in self.exponents:
            out |= 1 << e
        return out

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return "+".join("1" if e == 0 else ("x" if e == 1 else f"x^{e}") for e in self.exponents)


def separation(spec: CirculantSpec) -> int:
    """Cyclic distance between the two ones of a weight-2 row."""
    if spec.weight != 2:
        raise ValueError(f"separation is defined for weight-2 circulants, got {spec.kind}")
    a, b = spec.exponents
    d = b - a
    return min(d, spec.m - d)


def shift_equivalent(p: CirculantSpec, q: CirculantSpec) -> bool:
    """True iff q = x^k p for some k, i.e. the separations agree."""
    if p.m != q.m:
        raise ValueError(f"moduli differ: {p.m} vs {q.m}")
    return separation(p) == separation(q)


def expand(spec: CirculantSpec) -> list[tuple[int, ...]]:
    """Row view of the m x m binary matrix: row i has ones at i+e mod m."""
    m = spec.m
    return [tuple(sorted((i + e) % m for e in spec.exponents)) for i in range(m)]


def expand_dense(spec: CirculantSpec):
    import numpy as np

    out = np.zeros((spec.m, spec.m), dtype=np.uint8)
    for i, cols in enumerate(expand(spec)):
        out[i, list(cols)] = 1
    return out


def circulant_girth(m: int, s: int) -> int:
    """Girth of the Tanner graph of a weight-2 circulant with separation s."""
    if not 1 <= s <= m // 2:
        raise ValueError(f"separation must lie in [1, {m // 2}], got {s}")
    return 2 * m // gcd(m, s)


# GF(2)[x] arithmetic on int bitmasks


def poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("polynomial modulus is zero")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_mulmod_xm1(a: int, b: int, m: int) -> int:
    """Product reduced modulo x^m + 1 (exponents taken mod m)."""
    return poly_mod(poly_mul(a, b), (1 << m) | 1)


def gcd_fullrank_check(first_block_polys: Sequence[CirculantSpec]) -> bool:
    """gcd(1 + prod p_h, x^m + 1) == 1 over GF(2)[x]."""
    polys = list(first_block_polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    m = polys[0].m
    if any(p.m != m for p in polys):
        raise ValueError("all polynomials must share m")
    prod = 1
    for p in polys:
        prod = poly_mulmod_xm1(prod, p.to_poly(), m)
    return poly_gcd(prod ^ 1, (1 << m) | 1) == 1


def all_weight_two(m: int) -> Iterable[CirculantSpec]:
    for a in range(m):
        for b in range(a + 1, m):
            yield CirculantSpec(m, (a, b))
