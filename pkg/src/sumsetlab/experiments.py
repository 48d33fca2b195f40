"""Seeded sampling experiments and exhaustive scans over k-subsets of [n].

Reproducibility scheme: work is split into a fixed number of shards
(SHARD_COUNT, independent of the worker count), and shard s draws from
its own counter-based Philox stream keyed by (seed, s). Results are
merged by plain counter addition, so the outcome is bit-identical for any
worker count, including 1. Statistics are accumulated as exact integer
sums and only converted to floats in the final summary.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .core import CapExceeded, IntegerSet, binomial
from .lattice import find_minima
from .sumset import fold_size
from .theory import popular_sizes
from .types import h_type

SHARD_COUNT = 64

DEFAULT_SUBSET_BUDGET = 5_000_000


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of one sampling experiment over k-subsets of {1..n}.

    samples = 0 means exhaustive: every subset is evaluated once (subject
    to the subset budget) and the seed is irrelevant.
    """

    n: int
    k: int
    h: int
    samples: int
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if not self.n >= self.k >= 2:
            raise ValueError("need n >= k >= 2")
        if self.h < 1:
            raise ValueError("h must be positive")
        if self.samples < 0:
            raise ValueError("samples must be nonnegative")
        if self.workers < 1:
            raise ValueError("workers must be positive")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "h": self.h,
            "samples": self.samples,
            "seed": self.seed,
            "workers": self.workers,
        }


@dataclass(frozen=True)
class Histogram:
    """Occurrence counts keyed by |hA| value."""

    counts: dict[int, int]
    total: int

    def to_dict(self) -> dict:
        return {
            "counts": {str(size): self.counts[size] for size in sorted(self.counts)},
            "total": self.total,
        }

    def to_csv_rows(self) -> list[tuple[int, int, str]]:
        return [
            (size, self.counts[size], format(self.counts[size] / self.total, ".10f"))
            for size in sorted(self.counts)
        ]


def _shard_sizes(total: int, shards: int) -> list[int]:
    base, extra = divmod(total, shards)
    return [base + (1 if i < extra else 0) for i in range(shards)]


def _shard_rng(seed: int, shard: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(shard,))
    return np.random.Generator(np.random.Philox(ss))


def _sample_subset(rng: np.random.Generator, n: int, k: int) -> tuple[int, ...]:
    """Uniform k-subset of {1..n} via a partial Fisher-Yates shuffle on a
    virtual array (exactly uniform, O(k) memory)."""
    swap: dict[int, int] = {}
    out = []
    for j in range(k):
        r = int(rng.integers(j, n))
        vj = swap.get(j, j)
        vr = swap.get(r, r)
        swap[j], swap[r] = vr, vj
        out.append(vr + 1)
    out.sort()
    return tuple(out)


def _random_shard(args) -> Counter:
    n, k, h, seed, shard, count = args
    rng = _shard_rng(seed, shard)
    counts: Counter = Counter()
    for _ in range(count):
        counts[fold_size(_sample_subset(rng, n, k), h)] += 1
    return counts


def _run_sharded(jobs, worker, workers: int):
    if workers <= 1:
        return [worker(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, jobs))


def random_subset_experiment(config: ExperimentConfig) -> tuple[Histogram, dict]:
    """Sample |hA| over uniform random k-subsets of [n].

    Returns the histogram plus a summary with the B_h fraction (samples
    attaining the maximum C(h+k-1, k-1)) and, among the rest, the fraction
    landing on the popular sizes M - C(j+k-1, k-1), 0 <= j <= h-2.
    """
    if config.samples == 0:
        hist = exhaustive_scan(config.n, config.k, config.h, workers=config.workers)
    else:
        jobs = [
            (config.n, config.k, config.h, config.seed, shard, count)
            for shard, count in enumerate(_shard_sizes(config.samples, SHARD_COUNT))
        ]
        merged: Counter = Counter()
        for part in _run_sharded(jobs, _random_shard, config.workers):
            merged.update(part)
        hist = Histogram(dict(merged), config.samples)

    M = binomial(config.h + config.k - 1, config.k - 1)
    popular = popular_sizes(config.h, config.k)
    bh_count = hist.counts.get(M, 0)
    non_bh = hist.total - bh_count
    popular_hits = sum(hist.counts.get(size, 0) for size in popular)
    summary = {
        "config": config.to_dict(),
        "max_size": M,
        "bh_count": bh_count,
        "bh_fraction": bh_count / hist.total if hist.total else None,
        "non_bh_count": non_bh,
        "popular_sizes": popular,
        "popular_fraction": popular_hits / non_bh if non_bh else None,
    }
    return hist, summary


def _scan_shard(args) -> Counter:
    n, k, h, first = args
    counts: Counter = Counter()
    for rest in itertools.combinations(range(first + 1, n + 1), k - 1):
        counts[fold_size((first,) + rest, h)] += 1
    return counts


def exhaustive_scan(
    n: int, k: int, h: int, workers: int = 1, budget: int = DEFAULT_SUBSET_BUDGET
) -> Histogram:
    """Exact frequency of every |hA| over all C(n, k) subsets of {1..n}."""
    total = binomial(n, k)
    if total > budget:
        raise CapExceeded(f"C({n},{k}) = {total} subsets exceed the budget of {budget}")
    if total == 0:
        raise ValueError("no subsets to scan")
    jobs = [(n, k, h, first) for first in range(1, n - k + 2)]
    merged: Counter = Counter()
    for part in _run_sharded(jobs, _scan_shard, workers):
        merged.update(part)
    return Histogram(dict(merged), total)


def _minima_shard(args):
    n, k, seed, shard, count, cap, minima_count = args
    rng = _shard_rng(seed, shard)
    hist: Counter = Counter()
    found = [0] * minima_count
    sums = [0] * minima_count
    sqsums = [0] * minima_count
    truncated = [0] * minima_count
    for _ in range(count):
        A = IntegerSet(_sample_subset(rng, n, k))
        report = find_minima(A, minima_count, max_cap=cap)
        for i in range(minima_count):
            if i < len(report.minima):
                hi = report.minima[i] // 2
                found[i] += 1
                sums[i] += hi
                sqsums[i] += hi * hi
                if i == 0:
                    hist[hi] += 1
            else:
                truncated[i] += 1
    return hist, found, sums, sqsums, truncated


def minima_statistics(
    n: int,
    k: int,
    samples: int,
    seed: int,
    cap: int,
    count: int = 1,
    workers: int = 1,
) -> dict:
    """Distribution of the first lattice minima over random k-subsets.

    For each sampled subset the first `count` successive minima are
    computed exactly (up to the even norm cap); a sample whose i-th
    minimum exceeds the cap counts toward that minimum's truncation rate
    and is excluded from its mean. The summary carries the full histogram
    of h1 = lambda_1 / 2, and mean/stddev per minimum.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    if not 1 <= count <= k - 2:
        raise ValueError(f"count must be in [1, {k - 2}]")
    if cap < 4 or cap % 2:
        raise ValueError("cap must be an even integer >= 4")
    jobs = [
        (n, k, seed, shard, per, cap, count)
        for shard, per in enumerate(_shard_sizes(samples, SHARD_COUNT))
    ]
    hist: Counter = Counter()
    found = [0] * count
    sums = [0] * count
    sqsums = [0] * count
    truncated = [0] * count
    for part_hist, part_found, part_sums, part_sq, part_trunc in _run_sharded(
        jobs, _minima_shard, workers
    ):
        hist.update(part_hist)
        for i in range(count):
            found[i] += part_found[i]
            sums[i] += part_sums[i]
            sqsums[i] += part_sq[i]
            truncated[i] += part_trunc[i]

    minima_stats = []
    for i in range(count):
        if found[i]:
            mean = sums[i] / found[i]
            var = sqsums[i] / found[i] - mean * mean
            stddev = var**0.5 if var > 0 else 0.0
        else:
            mean = stddev = None
        minima_stats.append(
            {
                "index": i + 1,
                "found": found[i],
                "truncated": truncated[i],
                "truncation_rate": truncated[i] / samples,
                "mean_h": mean,
                "stddev_h": stddev,
            }
        )
    return {
        "config": {"n": n, "k": k, "samples": samples, "seed": seed, "cap": cap, "count": count},
        "minima": minima_stats,
        "h1_histogram": {str(key): hist[key] for key in sorted(hist)},
    }


def type_census(
    n: int, k: int, h: int, budget: int = DEFAULT_SUBSET_BUDGET
) -> tuple[int, list[IntegerSet]]:
    """Distinct h-types over all k-subsets of {1..n}, with the
    lexicographically least representative of each type, in order of
    first appearance. The count is a lower bound for the number of types
    over all of Z, not an answer to how many exist."""
    total = binomial(n, k)
    if total > budget:
        raise CapExceeded(f"C({n},{k}) = {total} subsets exceed the budget of {budget}")
    if total == 0:
        raise ValueError("no subsets to scan")
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for combo in itertools.combinations(range(1, n + 1), k):
        part = h_type(IntegerSet(combo), h)
        if part.class_ids not in seen:
            seen[part.class_ids] = combo
    return len(seen), [IntegerSet(rep) for rep in seen.values()]
