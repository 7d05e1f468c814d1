import random
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_block_matrix
from qcgirth.blockmatrix import BlockMatrix, DecompositionMinor, assemble, expand_block
from qcgirth.circulant import CirculantSpec, expand_dense
from qcgirth.sparse import SparseBinaryMatrix, gf2_rank, is_regular, row_col_weight_profile


def dense_rank_gf2(a: np.ndarray) -> int:
    """Plain row reduction on a dense copy, used as a reference."""
    a = a.copy() % 2
    rank = 0
    for c in range(a.shape[1]):
        piv = next((r for r in range(rank, a.shape[0]) if a[r, c]), None)
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        for r in range(a.shape[0]):
            if r != rank and a[r, c]:
                a[r] ^= a[rank]
        rank += 1
    return rank


I5 = CirculantSpec.weight_one(5, 0)
Z5 = CirculantSpec.zero(5)


def test_assemble_infers_shape():
    bm = assemble([[I5, I5, I5, I5]], alpha=1)
    assert (bm.beta, bm.gamma) == (4, 1)
    assert bm.shape == (5, 20)


def test_assemble_rejects_bad_alpha():
    with pytest.raises(ValueError):
        assemble([[I5, I5, I5]], alpha=2)


def test_mixed_moduli():
    with pytest.raises(ValueError):
        BlockMatrix(5, [[I5, CirculantSpec.zero(6)]], 1, 2, 1)


def test_ragged_grid():
    with pytest.raises(ValueError):
        BlockMatrix(5, [[I5, I5], [I5]], 1, 2, 2)


def test_degenerate_warns():
    with pytest.warns(UserWarning):
        bm = assemble([[I5, Z5], [I5, Z5]])
    assert bm.is_degenerate


def test_not_degenerate_silent():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert not assemble([[I5, I5]]).is_degenerate


def test_designed_rate():
    assert BlockMatrix(5, [[I5] * 4] * 2, 2, 2, 1).designed_rate == 0.5
    assert BlockMatrix(5, [[I5]], 1, 1, 1).designed_rate is None


@given(st.integers(0, 10**6))
def test_expand_block_restricts_to_blocks(seed):
    bm = random_block_matrix(random.Random(seed))
    full = expand_block(bm).to_dense()
    m = bm.m
    for i in range(bm.n_block_rows):
        for j in range(bm.n_block_cols):
            assert (full[i * m:(i + 1) * m, j * m:(j + 1) * m] == expand_dense(bm[i, j])).all()


def test_minor():
    bm = BlockMatrix(5, [[I5, Z5], [Z5, I5]], 1, 2, 2)
    minor = DecompositionMinor(bm, (1,), (1,)).as_block_matrix()
    assert minor.grid == ((I5,),)
    with pytest.raises(ValueError):
        DecompositionMinor(bm, (), (0,))
    with pytest.raises(ValueError):
        DecompositionMinor(bm, (2,), (0,))


class TestRank:
    def test_identity(self):
        assert gf2_rank(SparseBinaryMatrix.identity(7)) == 7

    def test_zero(self):
        assert gf2_rank(SparseBinaryMatrix(3, 4, ((), (), ()))) == 0

    @given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 2**31))
    def test_matches_dense_reduction(self, r, c, seed):
        a = np.random.default_rng(seed).integers(0, 2, (r, c)).astype(np.uint8)
        assert gf2_rank(SparseBinaryMatrix.from_dense(a)) == dense_rank_gf2(a)


def test_weight_profile():
    mat = SparseBinaryMatrix.from_dense([[1, 1, 0], [0, 1, 0]])
    assert row_col_weight_profile(mat) == ([2, 1], [1, 2, 0])
    assert is_regular(SparseBinaryMatrix.identity(3), 1, 1)


def test_single_circulant_profile():
    p = CirculantSpec.weight_two(6, 0, 3)
    rows, cols = row_col_weight_profile(expand_block(BlockMatrix(6, [[p]])))
    assert rows == [2] * 6 and cols == [2] * 6


def test_sparse_validation():
    with pytest.raises(ValueError):
        SparseBinaryMatrix(1, 3, ((2, 1),))
    with pytest.raises(ValueError):
        SparseBinaryMatrix(2, 3, ((0,),))


def test_syndrome():
    mat = SparseBinaryMatrix.from_dense([[1, 1, 0], [0, 1, 1]])
    assert mat.syndrome([1, 1, 1]).tolist() == [0, 0]
    assert mat.syndrome([1, 0, 0]).tolist() == [1, 0]
    with pytest.raises(ValueError):
        mat.syndrome([1, 0])
