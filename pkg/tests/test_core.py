import random

import pytest

from sumsetlab.core import (
    CapExceeded,
    IntegerSet,
    RationalSet,
    binomial,
    composition_count,
    enumerate_compositions,
    normalize,
)
from sumsetlab.sumset import fold_size


def test_binomial_small_values():
    assert binomial(5, 3) == 10
    assert binomial(13, 3) == 286
    assert binomial(0, 0) == 1


def test_binomial_vanishing_convention():
    assert binomial(2, 3) == 0
    assert binomial(-1, 2) == 0
    assert binomial(-5, 0) == 0


def test_binomial_rejects_negative_r():
    with pytest.raises(ValueError):
        binomial(5, -1)


def test_compositions_unit_vectors():
    comps = enumerate_compositions(1, 3)
    assert comps == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_compositions_lex_order_and_counts():
    for t, k in [(2, 2), (10, 4), (0, 3), (5, 1), (4, 5)]:
        comps = enumerate_compositions(t, k)
        assert len(comps) == composition_count(t, k)
        assert comps == sorted(comps)
        assert len(set(comps)) == len(comps)
        for c in comps:
            assert len(c) == k
            assert sum(c) == t
            assert all(x >= 0 for x in c)
    assert composition_count(2, 2) == 3
    assert composition_count(10, 4) == 286


def test_compositions_cap():
    with pytest.raises(CapExceeded):
        enumerate_compositions(100, 6, cap=1000)


def test_integer_set_sorts_and_dedupes():
    A = IntegerSet([25, 0, 18, 2, 18])
    assert A.elements == (0, 2, 18, 25)
    assert A.k == 4
    assert A.diam == 25
    assert 18 in A
    assert A == IntegerSet.from_text("0,2,18,25")


def test_integer_set_immutable_and_nonempty():
    A = IntegerSet([1, 2])
    with pytest.raises(AttributeError):
        A.elements = (3,)
    with pytest.raises(ValueError):
        IntegerSet([])


def test_rational_set_parses_fractions():
    X = RationalSet.from_text("0,1/2,2")
    assert [str(x) for x in X.elements] == ["0", "1/2", "2"]
    assert X.k == 3


def test_normalize_golden():
    assert normalize(IntegerSet([2, 4, 6])).elements == (0, 1, 2)
    assert normalize(IntegerSet([0, 2, 18, 25])).elements == (0, 2, 18, 25)
    assert normalize(IntegerSet([10, 20, 40])).elements == (0, 1, 3)


def test_normalize_idempotent_and_k1_error():
    A = IntegerSet([7, 21, 35])
    assert normalize(normalize(A)) == normalize(A)
    with pytest.raises(ValueError):
        normalize(IntegerSet([5]))


def test_normalize_preserves_sumset_sizes():
    rng = random.Random(4711)
    for _ in range(40):
        k = rng.randint(2, 5)
        A = IntegerSet(rng.sample(range(-100, 101), k))
        B = normalize(A)
        for h in range(1, 7):
            assert fold_size(A.elements, h) == fold_size(B.elements, h)
