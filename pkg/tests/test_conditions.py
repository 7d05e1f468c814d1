import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_block_matrix
from qcgirth.blockmatrix import BlockMatrix, expand_block
from qcgirth.catalog import enumerate_configurations
from qcgirth.circulant import CirculantSpec
from qcgirth.conditions import (LEMMA_2C, Step, certify_girth_at_least, check_4cycles, check_6cycles,
                                check_8cycles, classify, fan_condition, full_report, iter_cycle_walks,
                                two_c_pairs, walk_configuration, witness_holds)
from qcgirth.oracle import count_cycles_upto, girth_bfs


def C(m, *e):
    return CirculantSpec(m, e)


def bm_of(m, rows):
    return BlockMatrix(m, rows, 1, len(rows[0]), len(rows))


CATALOG = {s: {c.grid for c in enumerate_configurations(s)} for s in (2, 3, 4)}


class TestFan:
    def test_closed(self):
        walk = [Step(0, 0, 0, 0, 3), Step(0, 0, 3, 0, 0)]
        assert fan_condition(walk, 6)
        assert not fan_condition([Step(0, 0, 0, 0, 2), Step(0, 0, 0, 0, 2)], 6)

    def test_broken_chain(self):
        with pytest.raises(ValueError):
            fan_condition([Step(0, 0, 0, 1, 0), Step(0, 0, 0, 0, 0)], 5)

    def test_exponents_checked_against_matrix(self):
        bm = bm_of(6, [[C(6, 0, 3)]])
        with pytest.raises(ValueError):
            fan_condition([Step(0, 0, 1, 0, 3), Step(0, 0, 3, 0, 1)], 6, bm)

    def test_too_short(self):
        with pytest.raises(ValueError):
            fan_condition([Step(0, 0, 0, 0, 0)], 5)


class TestFourCycles:
    def test_half_separation(self):
        r = check_4cycles(bm_of(6, [[C(6, 0, 3)]]))
        assert r.ids() == {"4.1"}

    def test_equal_separations_in_a_row(self):
        r = check_4cycles(bm_of(7, [[C(7, 0, 2), C(7, 1, 3)]]))
        assert r.ids() == {"4.2"}

    def test_identity_minor(self):
        i = C(5, 0)
        assert check_4cycles(bm_of(5, [[i, i], [i, i]])).ids() == {"4.3"}

    def test_clean(self):
        assert check_4cycles(bm_of(7, [[C(7, 0, 1), C(7, 0, 2)]])).ok


def test_witnesses_replay():
    rng = random.Random(7)
    for _ in range(40):
        bm = random_block_matrix(rng, m_range=(5, 9), max_blocks=3)
        for v in full_report(bm).violations:
            assert witness_holds(v, bm.m)


def test_report_json():
    r = check_4cycles(bm_of(6, [[C(6, 0, 3)]]))
    doc = json.loads(r.to_json())
    assert doc["ok"] is False and doc["violations"][0]["condition_id"] == "4.1"
    assert doc["violations"][0]["blocks"] == [[1, 1]]


def test_lemma_2c():
    bm = bm_of(11, [[C(11, 0, 1), C(11, 0, 3)]])
    assert two_c_pairs(bm) == [((0, 0), (0, 1))]
    r = check_8cycles(bm, exhaustive=False)
    assert r.ids() == {LEMMA_2C}


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_walk_configurations_are_catalogued(seed):
    bm = random_block_matrix(random.Random(seed), m_range=(4, 8), max_blocks=3)
    for n in (4, 6, 8):
        for walk in iter_cycle_walks(bm, n):
            assert walk_configuration(walk) in CATALOG[n // 2]
            assert not classify(walk).endswith("?")


@settings(max_examples=100)
@given(st.integers(0, 10**6))
def test_short_checks_match_oracle(seed):
    bm = random_block_matrix(random.Random(seed))
    counts = count_cycles_upto(expand_block(bm), 6)
    assert check_4cycles(bm).ok == (4 not in counts)
    assert check_6cycles(bm).ok == (6 not in counts)


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_eight_cycle_items_match_oracle(seed):
    bm = random_block_matrix(random.Random(seed), m_range=(5, 10), max_blocks=3, weights=(0.3, 0.5, 0.2))
    counts = count_cycles_upto(expand_block(bm), 8)
    r = check_8cycles(bm)
    if not two_c_pairs(bm):
        assert r.ok == (8 not in counts)
    elif 8 in counts:
        assert not r.ok


@settings(max_examples=60)
@given(st.integers(0, 10**6), st.sampled_from([6, 8, 10]))
def test_certificate_matches_oracle(seed, target):
    bm = random_block_matrix(random.Random(seed), m_range=(5, 12), max_blocks=3)
    ok, report = certify_girth_at_least(bm, target)
    g = girth_bfs(expand_block(bm))
    assert ok == (g is None or g >= target)
    assert ok == report.ok


def test_certificate_target_range():
    with pytest.raises(ValueError):
        certify_girth_at_least(bm_of(5, [[C(5, 0)]]), 12)
