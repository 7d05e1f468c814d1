import os
import random

import pytest
from hypothesis import HealthCheck, settings

from qcgirth.blockmatrix import BlockMatrix
from qcgirth.circulant import CirculantSpec

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def random_block_matrix(rng: random.Random, m_range=(5, 12), max_blocks=4, weights=(0.3, 0.4, 0.3)) -> BlockMatrix:
    m = rng.randint(*m_range)
    r, c = rng.randint(1, max_blocks), rng.randint(1, max_blocks)
    grid = []
    for _ in range(r):
        row = []
        for _ in range(c):
            k = rng.choices((0, 1, 2), weights)[0]
            row.append(CirculantSpec(m, tuple(rng.sample(range(m), k))))
        grid.append(row)
    return BlockMatrix(m, grid, 1, c, r)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {detail}")
