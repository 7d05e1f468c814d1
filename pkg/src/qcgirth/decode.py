"""Sum-product decoding over BPSK/AWGN and a Monte-Carlo FER harness.

The decoder is vectorized over a batch of received words: messages live on
the edges of the Tanner graph, stored once in row-major order and once in
column-major order, and segment sums use ``np.add.reduceat``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .blockmatrix import BlockMatrix, expand_block
from .sparse import SparseBinaryMatrix, gf2_rank

_CLIP = 1.0 - 1e-12
_TINY = 1e-300


@dataclass(frozen=True)
class DecoderConfig:
    max_iterations: int = 20
    early_stop: bool = True

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


@dataclass(frozen=True)
class FerPoint:
    snr_db: float
    trials: int
    block_errors: int
    fer: float
    fer_plus: float
    fer_minus: float
    censored: bool = False

    def as_row(self) -> list:
        return [self.snr_db, self.trials, self.block_errors, self.fer, self.fer_plus, self.fer_minus]


def fer_error_bars(trials: int, errors: int) -> tuple[float, float, float]:
    """FER and its bars FER * exp(+-sqrt((N - Nerr) / (N * Nerr))).

    With no errors the bars are undefined and returned as NaN.
    """
    if trials <= 0 or not 0 <= errors <= trials:
        raise ValueError(f"need 0 <= errors <= trials and trials > 0, got {errors}/{trials}")
    fer = errors / trials
    if errors == 0:
        return fer, math.nan, math.nan
    w = math.sqrt((trials - errors) / (trials * errors))
    return fer, fer * math.exp(w), fer * math.exp(-w)


def _segments(keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Start offsets of the nonempty segments of sorted keys, and their ids."""
    ids, starts = np.unique(keys, return_index=True)
    return starts, ids


def _uniform(keys: np.ndarray, n: int) -> int:
    """Common segment length when every one of the n keys occurs equally often, else 0."""
    counts = np.bincount(keys, minlength=n)
    return int(counts[0]) if n and counts[0] and (counts == counts[0]).all() else 0


class BPDecoder:
    """Sum-product decoder bound to one parity-check matrix.

    Messages are kept edge-major, shape (edges, batch), with edges in row
    order.  When every check has the same degree the leave-one-out tanh
    products come from prefix and suffix products; otherwise they come from
    log-magnitude sums and sign parities.
    """

    def __init__(self, H: SparseBinaryMatrix, cfg: DecoderConfig | None = None):
        self.H = H
        self.cfg = cfg or DecoderConfig()
        ent = np.array(H.entries(), dtype=np.int64).reshape(-1, 2)
        self.edge_row = ent[:, 0]
        self.edge_col = ent[:, 1]
        self.by_col = np.lexsort((self.edge_row, self.edge_col))
        self.row_starts, self.row_ids = _segments(self.edge_row)
        self.col_starts, self.col_ids = _segments(self.edge_col[self.by_col])
        self.dc = _uniform(self.edge_row, H.n_rows)
        self.dv = _uniform(self.edge_col, H.n_cols)

    def _row_sum(self, x: np.ndarray) -> np.ndarray:
        if self.dc:
            return x.reshape(self.H.n_rows, self.dc, -1).sum(axis=1)
        out = np.zeros((self.H.n_rows, x.shape[1]), dtype=x.dtype)
        if len(x):
            out[self.row_ids] = np.add.reduceat(x, self.row_starts, axis=0)
        return out

    def _col_sum(self, x: np.ndarray) -> np.ndarray:
        x = x[self.by_col]
        if self.dv:
            return x.reshape(self.H.n_cols, self.dv, -1).sum(axis=1)
        out = np.zeros((self.H.n_cols, x.shape[1]), dtype=x.dtype)
        if len(x):
            out[self.col_ids] = np.add.reduceat(x, self.col_starts, axis=0)
        return out

    def _extrinsic(self, t: np.ndarray) -> np.ndarray:
        """Product of t over the other edges of the same check."""
        if self.dc == 1:
            return np.ones_like(t)
        if self.dc:
            t3 = t.reshape(self.H.n_rows, self.dc, -1)
            pre = np.cumprod(t3, axis=1)
            suf = np.cumprod(t3[:, ::-1], axis=1)[:, ::-1]
            ext = np.empty_like(t3)
            ext[:, 0] = suf[:, 1]
            ext[:, -1] = pre[:, -2]
            ext[:, 1:-1] = pre[:, :-2] * suf[:, 2:]
            return ext.reshape(t.shape)
        neg = (t < 0).astype(np.int64)
        logmag = np.log(np.maximum(np.abs(t), _TINY))
        tot_neg = self._row_sum(neg)[self.edge_row]
        tot_log = self._row_sum(logmag)[self.edge_row]
        return (1.0 - 2.0 * ((tot_neg - neg) & 1)) * np.exp(tot_log - logmag)

    def _syndrome_ok(self, hard: np.ndarray) -> np.ndarray:
        return ~(self._row_sum(hard[self.edge_col]) & 1).any(axis=0)

    def syndrome(self, bits) -> np.ndarray:
        """Syndromes of a batch of words, shape (batch, n_rows)."""
        bits = np.asarray(bits, dtype=np.int64)
        return (self._row_sum(bits.T[self.edge_col]) & 1).T

    def decode_batch(self, llr) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Decode each row of ``llr``; returns (bits, converged, iterations)."""
        llr = np.asarray(llr, dtype=np.float64)
        if llr.ndim != 2 or llr.shape[1] != self.H.n_cols:
            raise ValueError(f"expected llr of shape (batch, {self.H.n_cols}), got {llr.shape}")
        b = llr.shape[0]
        bits = np.zeros((self.H.n_cols, b), dtype=np.uint8)
        converged = np.zeros(b, dtype=bool)
        iters = np.zeros(b, dtype=np.int64)
        active = np.arange(b)
        ch = np.ascontiguousarray(llr.T)
        v2c = ch[self.edge_col]
        for it in range(1, self.cfg.max_iterations + 1):
            ext = np.clip(self._extrinsic(np.tanh(0.5 * v2c)), -_CLIP, _CLIP)
            c2v = 2.0 * np.arctanh(ext)
            total = ch + self._col_sum(c2v)
            v2c = total[self.edge_col] - c2v
            hard = (total < 0).astype(np.int64)
            ok = self._syndrome_ok(hard)
            bits[:, active] = hard
            iters[active] = it
            converged[active] = ok
            if self.cfg.early_stop and ok.any():
                keep = ~ok
                active, ch, v2c = active[keep], ch[:, keep], v2c[:, keep]
                if not len(active):
                    break
        return bits.T.copy(), converged, iters

    def decode(self, llr) -> tuple[np.ndarray, bool, int]:
        llr = np.asarray(llr, dtype=np.float64)
        if llr.shape != (self.H.n_cols,):
            raise ValueError(f"expected {self.H.n_cols} llr values, got shape {llr.shape}")
        bits, conv, it = self.decode_batch(llr[None, :])
        return bits[0], bool(conv[0]), int(it[0])


def bp_decode(H: SparseBinaryMatrix, llr, cfg: DecoderConfig | None = None) -> tuple[np.ndarray, bool, int]:
    """Hard decisions, converged flag and iterations used for one word."""
    return BPDecoder(H, cfg).decode(llr)


def noise_sigma(snr_db: float, rate: float) -> float:
    """Noise standard deviation for Eb/N0 = snr_db with unit-energy BPSK."""
    if not 0 < rate < 1:
        raise ValueError(f"rate must lie in (0, 1), got {rate}")
    return math.sqrt(1.0 / (2.0 * rate * 10.0 ** (snr_db / 10.0)))


def awgn_channel(bits, snr_db: float, rate: float, seed: int | np.random.Generator = 0) -> np.ndarray:
    """Channel LLRs 2y/sigma^2 for BPSK (0 -> +1) over AWGN at Eb/N0 = snr_db."""
    sigma = noise_sigma(snr_db, rate)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    x = 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)
    y = x + sigma * rng.standard_normal(x.shape)
    return 2.0 * y / sigma**2


@dataclass(frozen=True)
class SimulationConfig:
    min_block_errors: int = 10
    max_trials: int = 10**7
    seed: int = 0
    jobs: int = 1
    first_batch: int = 32
    max_batch: int = 128
    decoder: DecoderConfig = field(default_factory=DecoderConfig)

    def __post_init__(self) -> None:
        if self.min_block_errors < 1 or self.max_trials < 1 or self.jobs < 1:
            raise ValueError("min_block_errors, max_trials and jobs must be positive")
        if not 1 <= self.first_batch <= self.max_batch:
            raise ValueError("need 1 <= first_batch <= max_batch")


_SIM: tuple[BPDecoder, float] | None = None


def _init_sim(H: SparseBinaryMatrix, cfg: DecoderConfig, rate: float) -> None:
    global _SIM
    _SIM = (BPDecoder(H, cfg), rate)


def _run_batch(args: tuple[float, int, tuple[int, ...]]) -> int:
    snr_db, size, key = args
    assert _SIM is not None
    dec, rate = _SIM
    rng = np.random.default_rng(np.random.SeedSequence(key))
    llr = awgn_channel(np.zeros((size, dec.H.n_cols)), snr_db, rate, rng)
    bits, _, _ = dec.decode_batch(llr)
    return int(bits.any(axis=1).sum())


def _code_rate(H: SparseBinaryMatrix, bm: BlockMatrix | None) -> float:
    if bm is not None and bm.designed_rate is not None:
        return bm.designed_rate
    return (H.n_cols - gf2_rank(H)) / H.n_cols


def simulate_fer(code: BlockMatrix | SparseBinaryMatrix, snr_grid: Iterable[float], min_block_errors: int = 10,
                 seed: int = 0, *, config: SimulationConfig | None = None, rate: float | None = None,
                 progress=None) -> list[FerPoint]:
    """FER per SNR point with the all-zero codeword.

    Trials run in rounds; in each round every worker decodes one batch whose
    noise is seeded from (seed, point, worker, round), so results depend only
    on the seed and the worker count.  A point stops once it has
    ``min_block_errors`` errors, or is marked censored at the trial cap.
    """
    cfg = config or SimulationConfig(min_block_errors=min_block_errors, seed=seed)
    if isinstance(code, BlockMatrix):
        bm, H = code, expand_block(code)
    else:
        bm, H = None, code
    r = rate if rate is not None else _code_rate(H, bm)
    points = []
    pool = ProcessPoolExecutor(cfg.jobs, initializer=_init_sim, initargs=(H, cfg.decoder, r)) if cfg.jobs > 1 else None
    if pool is None:
        _init_sim(H, cfg.decoder, r)
    try:
        for k, snr in enumerate(snr_grid):
            trials = errors = rnd = 0
            size = cfg.first_batch
            while errors < cfg.min_block_errors and trials < cfg.max_trials:
                sizes = []
                for _ in range(cfg.jobs):
                    s = min(size, cfg.max_trials - trials - sum(sizes))
                    if s > 0:
                        sizes.append(s)
                jobs = [(float(snr), s, (cfg.seed, k, w, rnd)) for w, s in enumerate(sizes)]
                results = list(pool.map(_run_batch, jobs)) if pool else [_run_batch(j) for j in jobs]
                trials += sum(sizes)
                errors += sum(results)
                rnd += 1
                size = min(2 * size, cfg.max_batch)
                if progress:
                    progress(snr, trials, errors)
            fer, plus, minus = fer_error_bars(trials, errors)
            points.append(FerPoint(float(snr), trials, errors, fer, plus, minus,
                                   censored=errors < cfg.min_block_errors))
    finally:
        if pool:
            pool.shutdown()
    return points


def parse_snr_grid(text: str) -> list[float]:
    """``a:b:step`` inclusive of b (up to rounding), or a comma list."""
    if ":" in text:
        parts = [float(x) for x in text.split(":")]
        if len(parts) != 3 or parts[2] <= 0 or parts[1] < parts[0]:
            raise ValueError(f"bad SNR range {text!r}; expected a:b:step with step > 0 and a <= b")
        a, b, st = parts
        n = int(math.floor((b - a) / st + 1e-9)) + 1
        return [round(a + i * st, 10) for i in range(n)]
    return [float(x) for x in text.split(",") if x.strip()]


def nonincreasing_within_bars(points: Sequence[FerPoint]) -> bool:
    """True when every FER step upward stays inside the overlapping error bars."""
    for p, q in zip(points, points[1:]):
        if q.fer > p.fer and q.fer_minus > p.fer_plus:
            return False
    return True
