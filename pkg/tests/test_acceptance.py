"""Acceptance suite: one test per criterion, each printing a PASS line with
its measured wall time. Run with `pytest tests/test_acceptance.py -v -s`.
"""

import random
import time
from fractions import Fraction

from sumsetlab.core import IntegerSet, RationalSet
from sumsetlab.experiments import (
    ExperimentConfig,
    exhaustive_scan,
    minima_statistics,
    random_subset_experiment,
)
from sumsetlab.lattice import find_minima, successive_minima
from sumsetlab.sumset import fold_sizes, sumset_profile
from sumsetlab.theory import construct_cute_set, construct_lemma_set, verify_main_theorem
from sumsetlab.types import embed_real_to_integers, h_type, product_to_sum, product_type, sum_to_product

SEED = 20250809

CENSUS_CONFIG = dict(n=1000, k=4, h=10, samples=100_000, seed=SEED)
MINSTAT_CONFIG = dict(n=10_000, k=4, samples=2000, seed=SEED, cap=1024)

_cache = {}


def _census_run(workers: int):
    key = ("census", workers)
    if key not in _cache:
        config = ExperimentConfig(**CENSUS_CONFIG, workers=workers)
        _cache[key] = random_subset_experiment(config)
    return _cache[key]


def _minstat_run(workers: int):
    key = ("minstat", workers)
    if key not in _cache:
        _cache[key] = minima_statistics(**MINSTAT_CONFIG, workers=workers)
    return _cache[key]


def _report(name: str, elapsed: float, detail: str = ""):
    suffix = f"  [{detail}]" if detail else ""
    print(f"PASS {name}  ({elapsed:.2f}s){suffix}")


def test_criterion_1_golden_profile():
    t0 = time.time()
    profile = sumset_profile(IntegerSet([0, 2, 18, 25]), 12)
    assert profile.sizes == (4, 10, 20, 34, 52, 74, 100, 130, 162, 193, 222, 249)
    assert profile.deficits == (0, 0, 0, 1, 4, 10, 20, 35, 58, 93, 142, 206)
    assert profile.deficit_first_differences == (0, 0, 1, 3, 6, 10, 15, 23, 35, 49, 64)
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report("criterion 1: golden size/deficit table", elapsed)


def test_criterion_2_minima_golden_values():
    t0 = time.time()
    rep = successive_minima(IntegerSet([0, 2, 18, 25]), 2, 64)
    assert tuple(m // 2 for m in rep.minima) == (4, 9)

    rep = successive_minima(IntegerSet([1, 5, 96, 100]), 2, 200)
    assert tuple(m // 2 for m in rep.minima) == (2, 95)
    assert rep.minimizers[0] in ((1, -1, -1, 1), (-1, 1, 1, -1))
    assert rep.minimizers[1] in ((0, -4, 95, -91), (0, 4, -95, 91))
    elapsed = time.time() - t0
    assert elapsed < 5.0
    _report("criterion 2: minima golden values", elapsed)


def test_criterion_3_theorem_oracle_suite():
    t0 = time.time()
    rng = random.Random(SEED)
    for _ in range(500):
        A = IntegerSet(rng.sample(range(1, 201), 4))
        assert verify_main_theorem(A).all_match, A
    for _ in range(200):
        A = IntegerSet(rng.sample(range(1, 101), 5))
        assert verify_main_theorem(A).all_match, A
    elapsed = time.time() - t0
    assert elapsed < 300.0
    _report("criterion 3: closed form vs brute force, 700 random sets", elapsed)


def test_criterion_4_lemma_grid():
    t0 = time.time()
    for a in range(2, 7):
        for b in range(a, 7):
            for k in (4, 5, 6):
                A = construct_lemma_set(a, b, k)
                rep = find_minima(A, 2, max_cap=256)
                assert rep.minima == (2 * a, 2 * b), (a, b, k, rep.minima)
    elapsed = time.time() - t0
    assert elapsed < 60.0
    _report("criterion 4: prescribed minima grid, 45 sets", elapsed)


def test_criterion_5_quadratic_size_family():
    t0 = time.time()
    for b in range(2, 9):
        A = construct_cute_set(b)
        sizes = fold_sizes(A.elements, b)
        assert sizes == [2 * (h * h + 1) for h in range(1, b + 1)], (b, sizes)
    elapsed = time.time() - t0
    _report("criterion 5: |hA| = 2(h^2+1) for b = 2..8", elapsed)


def test_criterion_6_exhaustive_scan():
    t0 = time.time()
    hist = exhaustive_scan(70, 4, 6)
    assert hist.total == 916_895
    spots = {84: 176_620, 83: 106_252, 80: 155_350, 74: 117_496, 64: 126_278, 49: 84_693}
    for size, count in spots.items():
        assert hist.counts[size] == count, (size, hist.counts[size])
    dominant = sorted(sorted(hist.counts, key=hist.counts.get, reverse=True)[:6], reverse=True)
    gaps = [a - b for a, b in zip(dominant, dominant[1:])]
    assert gaps == [1, 3, 6, 10, 15]
    assert all(19 <= size <= 84 for size in hist.counts)  # m = hk-h+1, M = C(9,3)
    assert any(row[:2] == (84, 176_620) for row in hist.to_csv_rows())
    elapsed = time.time() - t0
    assert elapsed < 120.0
    _report("criterion 6: exhaustive scan of C(70,4) subsets", elapsed,
            f"dominant gaps {gaps}")


def test_criterion_7_random_experiment_desk_scale():
    t0 = time.time()
    hist, summary = _census_run(workers=1)
    elapsed = time.time() - t0
    assert hist.total == 100_000
    assert 0.76 <= summary["bh_fraction"] <= 0.80, summary["bh_fraction"]
    assert summary["popular_sizes"] == [285, 282, 276, 266, 251, 230, 202, 166, 121]
    assert 0.95 <= summary["popular_fraction"] <= 0.99, summary["popular_fraction"]
    # sizes of 121 account for roughly 3.6% of the non-maximal samples
    p121 = hist.counts.get(121, 0) / summary["non_bh_count"]
    assert 0.025 <= p121 <= 0.045, p121
    assert elapsed < 60.0
    _report("criterion 7: 10^5-sample size census", elapsed,
            f"bh={summary['bh_fraction']:.4f} popular={summary['popular_fraction']:.4f}")


def test_criterion_8_embedding_suite():
    t0 = time.time()
    rng = random.Random(SEED)
    for _ in range(200):
        k = rng.randint(2, 5)
        h = rng.randint(1, 4)
        vals = set()
        while len(vals) < k:
            vals.add(Fraction(rng.randint(-200, 200), rng.randint(1, 50)))
        X = RationalSet(vals)
        A, trace = embed_real_to_integers(X, h)
        assert h_type(A, h) == h_type(X, h), (X, h)
        assert trace.epsilons[0] == 0 and trace.epsilons[-1] == 0
        bound = Fraction(1, 2 * h)
        assert all(abs(e) < bound for e in trace.epsilons)
    elapsed = time.time() - t0
    _report("criterion 8: 200 exact type-preserving embeddings", elapsed)


def test_criterion_9_sum_product_transport():
    t0 = time.time()
    rng = random.Random(SEED)
    for _ in range(100):
        k = rng.randint(2, 5)
        h = rng.randint(1, 3)
        S = IntegerSet(rng.sample(range(1, 31), k))
        assert product_type(sum_to_product(S), h) == h_type(S, h), (S, h)
    for _ in range(50):
        k = rng.randint(2, 5)
        h = rng.randint(1, 3)
        P = IntegerSet(rng.sample(range(1, 41), k))
        A = product_to_sum(P, h)
        assert h_type(A, h) == product_type(P, h), (P, h)
    elapsed = time.time() - t0
    _report("criterion 9: sum/product type transport, 150 sets", elapsed)


def test_criterion_10_minima_statistics():
    t0 = time.time()
    summary = _minstat_run(workers=1)
    elapsed = time.time() - t0
    stats = summary["minima"][0]
    mean = stats["mean_h"]
    root = MINSTAT_CONFIG["n"] ** 0.5
    assert 0.40 * root <= mean <= 0.60 * root, mean
    assert elapsed < 300.0
    _report("criterion 10: mean first minimum over 2000 subsets of [10^4]", elapsed,
            f"mean h1 = {mean:.2f}, band [{0.4 * root:.0f}, {0.6 * root:.0f}]")


def test_criterion_11_worker_determinism():
    t0 = time.time()
    hist1, _ = _census_run(workers=1)
    hist4, _ = _census_run(workers=4)
    hist8, _ = _census_run(workers=8)
    assert hist1.counts == hist4.counts == hist8.counts

    stats1 = _minstat_run(workers=1)
    stats4 = _minstat_run(workers=4)
    stats8 = _minstat_run(workers=8)
    assert stats1 == stats4 == stats8
    elapsed = time.time() - t0
    _report("criterion 11: bit-identical results with 1/4/8 workers", elapsed)
