import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_block_matrix
from qcgirth.blockmatrix import BlockMatrix, expand_block
from qcgirth.circulant import CirculantSpec
from qcgirth.oracle import (count_cycles_upto, enumerate_cycles, girth_bfs, girth_upper_bound, is_2s_cycle,
                            is_linked)
from qcgirth.sparse import SparseBinaryMatrix


def circ(m, *exps):
    return CirculantSpec(m, exps)


def expanded(m, *blocks):
    return expand_block(BlockMatrix(m, [list(blocks)], 1, len(blocks), 1))


def brute_girth(mat: SparseBinaryMatrix, limit: int = 8):
    """Shortest cycle by checking every candidate entry set: slow, independent."""
    ents = mat.entries()
    for s in range(2, limit // 2 + 1):
        for sub in combinations(ents, 2 * s):
            rows = {r for r, _ in sub}
            cols = {c for _, c in sub}
            if len(rows) == s and len(cols) == s and is_2s_cycle(sub):
                return 2 * s
    return None


class TestGirth:
    def test_examples(self):
        assert girth_bfs(expanded(6, circ(6, 0, 3))) == 4
        assert girth_bfs(expanded(6, circ(6, 0, 2))) == 6
        assert girth_bfs(expanded(7, circ(7, 0, 2), circ(7, 1, 5))) == 6
        assert girth_bfs(SparseBinaryMatrix.identity(5)) is None

    @given(st.integers(0, 10**6))
    def test_matches_entry_set_search(self, seed):
        rng = np.random.default_rng(seed)
        a = (rng.random((rng.integers(2, 6), rng.integers(2, 6))) < 0.45).astype(int)
        mat = SparseBinaryMatrix.from_dense(a)
        g = girth_bfs(mat)
        assert brute_girth(mat, 8) == (g if g is not None and g <= 8 else None)


class TestCount:
    def test_examples(self):
        assert count_cycles_upto(expanded(6, circ(6, 0, 3)), 4) == {4: 3}
        assert count_cycles_upto(SparseBinaryMatrix.identity(4), 8) == {}

    def test_bad_length(self):
        with pytest.raises(ValueError):
            count_cycles_upto(SparseBinaryMatrix.identity(2), 10)

    @given(st.integers(0, 10**6))
    def test_cycles_are_2s_cycles_with_two_points_per_line(self, seed):
        bm = random_block_matrix(random.Random(seed), m_range=(3, 6), max_blocks=3)
        mat = expand_block(bm)
        for cyc in enumerate_cycles(mat, 8):
            assert is_2s_cycle(cyc)
            for k in (0, 1):
                counts = {}
                for e in cyc:
                    counts[e[k]] = counts.get(e[k], 0) + 1
                assert set(counts.values()) == {2}

    @given(st.integers(0, 10**6))
    def test_smallest_count_is_girth(self, seed):
        mat = expand_block(random_block_matrix(random.Random(seed), m_range=(3, 8), max_blocks=3))
        counts = count_cycles_upto(mat, 8)
        g = girth_bfs(mat)
        if g is not None and g <= 8:
            assert min(counts) == g
        else:
            assert counts == {}


class TestLinked:
    LEFT = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]
    RIGHT = [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 0)]

    def test_figure_examples(self):
        assert is_linked(self.LEFT) and not is_2s_cycle(self.LEFT)
        assert is_linked(self.RIGHT) and is_2s_cycle(self.RIGHT)

    def test_small(self):
        assert is_linked([(0, 0), (0, 1), (1, 0), (1, 1)])
        assert is_2s_cycle([(0, 0), (0, 1), (1, 0), (1, 1)])
        assert not is_linked([(0, 0), (1, 0), (2, 1), (3, 1)])

    def test_odd_rejected(self):
        with pytest.raises(ValueError):
            is_linked([(0, 0), (0, 1), (1, 0)])


class TestBound:
    def test_worked_value(self):
        assert girth_upper_bound(3, 6, 404) == 14

    def test_small_r(self):
        assert girth_upper_bound(3, 6, 10) == 8

    def test_degenerate(self):
        with pytest.raises(ValueError):
            girth_upper_bound(2, 2, 1)

    @given(st.integers(2, 6), st.integers(3, 8), st.integers(1, 10**6))
    def test_even(self, c, s, r):
        assert girth_upper_bound(c, s, r) % 2 == 0
