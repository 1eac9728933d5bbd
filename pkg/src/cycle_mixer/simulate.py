"""Seeded Monte Carlo for both walks at large deck sizes.

Each trial owns a counter-based substream keyed by seed XOR trial index, so
results are bit-identical for a given config no matter how trials are
blocked or how many worker threads run. Trials evolve vectorized in fixed-
size blocks; aggregation is a commutative histogram merge.
"""

import math
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .perms import count_j_cycles  # noqa: F401  (re-exported simulation op)
from .walks import STAR, WalkSpec, poisson_moment, reference_rate

_BLOCK = 2048

THREADS_ENV = "CYCLE_MIXER_THREADS"


@dataclass(frozen=True)
class SimConfig:
    spec: WalkSpec
    trials: int
    seed: int
    tracked_js: tuple[int, ...]
    c: float | None = None
    schedule: str | None = None
    collect_trials: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.tracked_js:
            raise ValueError("tracked_js must be nonempty")
        if any(not 1 <= j <= self.spec.n for j in self.tracked_js):
            raise ValueError("every tracked j must lie in 1..n")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class JStatistics:
    j: int
    histogram: dict[int, int]
    moments: dict[int, float]  # r -> empirical r-th moment, r = 1..4
    reference_rate: float | None
    z_scores: dict[int, float | None]
    tv_distance: float | None


@dataclass(frozen=True)
class EmpiricalSummary:
    config: SimConfig
    stats: dict[int, JStatistics]
    trial_counts: dict[int, list[int]] | None = field(default=None, compare=False)


def sample_step(state: tuple[int, ...], spec: WalkSpec, rng: np.random.Generator) -> tuple[int, ...]:
    """One step of the walk: left-multiply the state by a random generator
    of the chosen family."""
    n = spec.n
    if spec.kind == STAR:
        u = int(rng.integers(1, n))
        move = {0: u, u: 0}
    else:
        symbols = [int(x) for x in rng.choice(n, size=spec.i, replace=False)]
        move = {symbols[m]: symbols[(m + 1) % spec.i] for m in range(spec.i)}
    return tuple(move.get(v, v) for v in state)


def _dtype_for(n: int):
    return np.int16 if n < 2**15 else np.int32


def _star_step_table(gen: np.random.Generator, n: int, k: int) -> np.ndarray:
    u = gen.integers(1, n, size=k, dtype=np.int64)
    table = np.zeros((k, 2), dtype=np.int64)
    table[:, 1] = u
    return table


def _icycle_step_table(gen: np.random.Generator, n: int, k: int, i: int) -> np.ndarray:
    table = gen.integers(0, n, size=(k, i), dtype=np.int64)
    while True:
        sorted_rows = np.sort(table, axis=1)
        bad = (sorted_rows[:, 1:] == sorted_rows[:, :-1]).any(axis=1)
        if not bad.any():
            return table
        table[bad] = gen.integers(0, n, size=(int(bad.sum()), i), dtype=np.int64)


def _run_block(config: SimConfig, first_trial: int, last_trial: int) -> tuple[dict[int, Counter], dict[int, list[int]] | None]:
    spec = config.spec
    n, k = spec.n, spec.k
    block = last_trial - first_trial
    width = 2 if spec.kind == STAR else spec.i
    # Streams are drawn as int64 (the draw dtype shapes the bit stream) and
    # stored at int32 to keep per-block tables small.
    tables = np.empty((block, k, width), dtype=np.int32) if k else None
    for row, trial in enumerate(range(first_trial, last_trial)):
        gen = np.random.Generator(np.random.Philox(key=config.seed ^ trial))
        if k == 0:
            continue
        if spec.kind == STAR:
            tables[row] = _star_step_table(gen, n, k)
        else:
            tables[row] = _icycle_step_table(gen, n, k, spec.i)

    dtype = _dtype_for(n)
    perm = np.tile(np.arange(n, dtype=dtype), (block, 1))
    inv = perm.copy()
    rows = np.arange(block)[:, None]
    for s in range(k):
        cycle = tables[:, s, :]
        positions = np.take_along_axis(inv, cycle, axis=1)
        rotated = np.roll(cycle, -1, axis=1)
        perm[rows, positions] = rotated.astype(dtype)
        inv[rows, rotated] = positions

    tracked = set(config.tracked_js)
    hists: dict[int, Counter] = {j: Counter() for j in tracked}
    per_trial = {j: [] for j in tracked} if config.collect_trials else None
    for row in range(block):
        line = perm[row].tolist()
        seen = bytearray(n)
        counts = dict.fromkeys(tracked, 0)
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = line[x]
                length += 1
            if length in tracked:
                counts[length] += 1
        for j in tracked:
            hists[j][counts[j]] += 1
            if per_trial is not None:
                per_trial[j].append(counts[j])
    return hists, per_trial


def _resolve_threads(threads: int | None) -> int:
    cap = os.environ.get(THREADS_ENV)
    requested = threads if threads is not None else 1
    if cap is not None:
        requested = min(requested, max(1, int(cap)))
    return max(1, requested)


def _poisson_pmf(rate: float, count: int) -> float:
    return math.exp(-rate + count * math.log(rate) - math.lgamma(count + 1)) if rate > 0 else float(count == 0)


def _tv_to_poisson(hist: Counter, trials: int, rate: float) -> float:
    """Total variation against the Poisson pmf truncated just past the
    largest observed count, tail mass lumped into one bucket."""
    cutoff = max(hist) + 10
    tv = 0.0
    tail = 1.0
    for count in range(cutoff + 1):
        p = _poisson_pmf(rate, count)
        tail -= p
        tv += abs(hist.get(count, 0) / trials - p)
    tv += abs(tail)  # no observations beyond cutoff by construction
    return tv / 2.0


def _stats_for(config: SimConfig, j: int, hist: Counter) -> JStatistics:
    trials = config.trials
    raw = {r: sum(cnt * count**r for count, cnt in hist.items()) / trials for r in range(1, 9)}
    moments = {r: raw[r] for r in range(1, 5)}
    rate = None
    if config.c is not None and config.schedule is not None:
        rate = reference_rate(config.spec.kind, config.schedule, j, config.c, config.spec.i)
    z_scores: dict[int, float | None] = {}
    tv = None
    if rate is not None:
        for r in range(1, 5):
            variance = raw[2 * r] - raw[r] ** 2
            se = math.sqrt(variance / trials) if variance > 0 else 0.0
            z_scores[r] = (moments[r] - poisson_moment(rate, r)) / se if se > 0 else None
        tv = _tv_to_poisson(hist, trials, rate)
    else:
        z_scores = {r: None for r in range(1, 5)}
    return JStatistics(j, dict(sorted(hist.items())), moments, rate, z_scores, tv)


def run(config: SimConfig, threads: int | None = None) -> EmpiricalSummary:
    """Run ``config.trials`` independent walks and aggregate cycle-count
    statistics. Identical configs give bit-identical summaries regardless
    of ``threads``."""
    workers = _resolve_threads(threads)
    bounds = [
        (lo, min(lo + _BLOCK, config.trials)) for lo in range(0, config.trials, _BLOCK)
    ]
    hists: dict[int, Counter] = {j: Counter() for j in config.tracked_js}
    per_trial: dict[int, list[int]] | None = (
        {j: [] for j in config.tracked_js} if config.collect_trials else None
    )

    def merge(results):
        # Blocks arrive in submission order, so trial-level collection stays
        # ordered; histogram merging is commutative anyway.
        for block_hists, block_counts in results:
            for j in config.tracked_js:
                hists[j].update(block_hists[j])
                if per_trial is not None:
                    per_trial[j].extend(block_counts[j])

    if workers == 1:
        merge(_run_block(config, lo, hi) for lo, hi in bounds)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            merge(pool.map(lambda b: _run_block(config, *b), bounds))

    stats = {j: _stats_for(config, j, hists[j]) for j in config.tracked_js}
    return EmpiricalSummary(config, stats, per_trial)


def summary_to_dict(summary: EmpiricalSummary) -> dict:
    config = summary.config
    return {
        "walk": config.spec.kind,
        "n": config.spec.n,
        "k": config.spec.k,
        "i": config.spec.i,
        "trials": config.trials,
        "seed": config.seed,
        "c": config.c,
        "schedule": config.schedule,
        "stats": {
            str(j): {
                "histogram": {str(c): m for c, m in st.histogram.items()},
                "moments": {str(r): v for r, v in st.moments.items()},
                "reference_rate": st.reference_rate,
                "z_scores": {str(r): v for r, v in st.z_scores.items()},
                "tv_distance": st.tv_distance,
            }
            for j, st in summary.stats.items()
        },
    }
