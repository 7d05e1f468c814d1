import json
import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcgirth.catalog import (CycleConfiguration, canonical_grid, catalog_json, configurations_of_type,
                             enumerate_configurations, feasible_for_type, is_valid_configuration, label_matches,
                             parse_grid, partitions, qc_specialize, weights_vectors)


def test_partitions_count():
    # p(8) = 22
    assert len(list(partitions(8))) == 22
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]


def test_weights_vectors_s4():
    w = weights_vectors(4)
    assert len(w) == 13
    assert (8,) in w and (1,) * 8 in w
    assert (7, 1) not in w and (5, 1, 1, 1) in w


def test_weights_vectors_rejects_small_s():
    with pytest.raises(ValueError):
        weights_vectors(1)


def test_feasible_for_type_45():
    assert feasible_for_type(4, 5, 5) == [(2, 2, 1, 1, 1, 1, 1, 1), (2,) + (1,) * 8, (1,) * 10]


def test_feasible_for_type_is_symmetric():
    for r in range(1, 5):
        for c in range(1, 5):
            assert feasible_for_type(r, c, 4) == feasible_for_type(c, r, 4)


def test_feasible_for_type_range():
    with pytest.raises(ValueError):
        feasible_for_type(5, 1, 4)


@pytest.mark.parametrize("s,n", [(2, 3), (3, 7), (4, 27)])
def test_counts(s, n):
    assert len(enumerate_configurations(s)) == n


def test_type_histogram_s4():
    hist = Counter(tuple(sorted(c.type)) for c in enumerate_configurations(4))
    assert hist == {(2, 2): 6, (2, 3): 6, (3, 3): 4, (2, 4): 3, (1, 2): 2, (3, 4): 2,
                    (1, 1): 1, (1, 3): 1, (1, 4): 1, (4, 4): 1}


@pytest.mark.parametrize("s", [2, 3, 4])
def test_pruning_is_sound(s):
    assert enumerate_configurations(s, prune=True) == enumerate_configurations(s, prune=False)


def test_every_configuration_valid_and_canonical():
    for s in (2, 3, 4):
        for cfg in enumerate_configurations(s):
            assert is_valid_configuration(cfg.grid)
            assert canonical_grid(cfg.grid) == cfg.grid
            assert cfg.s == s
            assert sum(cfg.weights_vector) == 2 * s


def test_45_case():
    got = {c.grid for c in configurations_of_type(4, 5, 5)}
    assert len(got) == 2


def test_invalid_grids():
    assert not is_valid_configuration([[3]])
    assert not is_valid_configuration([[2, 0], [0, 2]])  # disconnected
    assert is_valid_configuration([[1, 1], [1, 1]])


@given(st.integers(0, 10**6))
def test_canonical_form_is_permutation_invariant(seed):
    rng = random.Random(seed)
    cfg = rng.choice(enumerate_configurations(4))
    g = [list(r) for r in cfg.grid]
    rng.shuffle(g)
    cols = list(zip(*g))
    rng.shuffle(cols)
    g = [list(r) for r in zip(*cols)]
    if rng.random() < 0.5:
        g = [list(r) for r in zip(*g)]
    assert canonical_grid(g) == cfg.grid


def test_transpose_roundtrip():
    cfg = CycleConfiguration(parse_grid("|3 1; 1 1|"))
    assert cfg.transpose().transpose() == cfg


def test_parse_and_str():
    g = parse_grid("|2 2; 0 2|")
    assert g == ((2, 2), (0, 2))
    assert str(CycleConfiguration(g)) == "|2 2; 0 2|"


def test_qc_labels_s2():
    labels = sorted(str(q) for c in enumerate_configurations(2) for q in qc_specialize(c))
    assert labels == ["|C-2 C-2|", "|C-4|", "|Δ-1 Δ-1; Δ-1 Δ-1|"]


def test_qc_rejects_long_cycles():
    with pytest.raises(ValueError):
        qc_specialize([[10]])


def test_label_matches():
    assert label_matches("C", 2) and not label_matches("C", 1)
    assert label_matches("J", 1) and not label_matches("J", 2)
    assert label_matches("Δ", 1) and label_matches("Δ", 2)


def test_catalog_json():
    doc = json.loads(catalog_json(3))
    assert doc["s"] == 3 and doc["count"] == 7 == len(doc["configurations"])
    assert {"type", "grid", "weights_vector", "qc"} <= set(doc["configurations"][0])
