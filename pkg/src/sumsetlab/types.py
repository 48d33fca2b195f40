"""Addition-table types, separation, and type-preserving transport between
rational, integer, and multiplicative settings.

The h-type of a k-element set is the partition of the composition vectors
(c_1, ..., c_k), c_i >= 0, sum c_i = h, by equal dot product with the
element vector. Its class count is |hA|. Partitions are canonicalized by
walking compositions in lexicographic order and numbering classes in
order of first appearance, so two partitions are equal exactly when the
serialized class id lists are equal.

Three transports are implemented, all exact:

  * embed_real_to_integers: a rational set is affinely placed in [0, 1];
    simultaneous dilations q*q0 are scanned until the fractional parts of
    the interior elements revisit a box of side 1/(2h), which yields a
    dilation Q with every Q*x_i within 1/(2h) of an integer. Rounding
    then preserves the h-type in both directions: equal sums stay equal
    because the total rounding error is below 1, distinct sums stay
    distinct because Q >= q0 >= 2/sep_h(X). All arithmetic is Fraction
    arithmetic; every box test is exact.

  * sum_to_product: s -> 2**s turns equal sums into equal products
    verbatim.

  * product_to_sum: the same box-collision scan applied to the base-2
    logarithms of the elements. Logarithms are irrational, so they are
    handled symbolically: every quantity in the scan is a rational linear
    combination of 1 and log2(p) for odd primes p, represented exactly by
    its coefficient vector (class LogLinear). Equality against a rational
    is decided by the coefficients alone (the basis is linearly
    independent over Q by unique factorization); strict comparisons are
    decided by interval evaluation at escalating precision, which must
    terminate because only nonzero values reach it. The output set is
    verified against the product type by exact big-integer products
    before being returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .core import CapExceeded, IntegerSet, RationalSet, enumerate_compositions

PRECISION_SCHEDULE = (64, 128, 256, 512, 1024, 2048, 4096)

DEFAULT_POWER_BIT_BUDGET = 1_000_000


class PrecisionExhaustedError(RuntimeError):
    """An interval sign/floor query stayed ambiguous through the whole
    precision schedule."""

    def __init__(self, message: str, attempted: tuple[int, ...]):
        super().__init__(f"{message} (attempted precisions: {list(attempted)})")
        self.attempted = attempted


@dataclass(frozen=True)
class TypePartition:
    """Canonical h-type: one class id per composition of h into k parts,
    in lexicographic composition order."""

    h: int
    k: int
    class_ids: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return max(self.class_ids) + 1 if self.class_ids else 0

    def to_dict(self) -> dict:
        return {"h": self.h, "k": self.k, "class_ids": list(self.class_ids)}


def _partition_by(keys) -> tuple[int, ...]:
    ids: dict = {}
    out = []
    for key in keys:
        if key not in ids:
            ids[key] = len(ids)
        out.append(ids[key])
    return tuple(out)


def h_type(A, h: int, cap: int | None = None) -> TypePartition:
    """The h-type of an IntegerSet or RationalSet."""
    if h < 1:
        raise ValueError("h must be positive")
    vals = A.elements
    k = len(vals)
    comps = enumerate_compositions(h, k, cap)
    ids = _partition_by(sum(c * v for c, v in zip(comp, vals)) for comp in comps)
    return TypePartition(h, k, ids)


def product_type(P: IntegerSet, h: int, cap: int | None = None) -> TypePartition:
    """The multiplicative h-type: compositions partitioned by the exact
    product prod p_i**c_i. Elements must be positive."""
    if h < 1:
        raise ValueError("h must be positive")
    if P.elements[0] < 1:
        raise ValueError("product types need positive elements")
    vals = P.elements
    k = len(vals)
    comps = enumerate_compositions(h, k, cap)

    def key(comp):
        v = 1
        for c, p in zip(comp, vals):
            if c:
                v *= p**c
        return v

    return TypePartition(h, k, _partition_by(key(c) for c in comps))


def separation(X, h: int) -> Fraction:
    """Smallest nonzero gap between distinct h-fold sums of X (exact)."""
    if h < 1:
        raise ValueError("h must be positive")
    vals = X.elements
    sums = sorted({sum(c * v for c, v in zip(comp, vals)) for comp in enumerate_compositions(h, len(vals))})
    if len(sums) < 2:
        raise ValueError("all h-fold sums coincide; separation undefined")
    return Fraction(min(b - a for a, b in zip(sums, sums[1:])))


@dataclass(frozen=True)
class EmbeddingTrace:
    """Witness data for one run of the box-collision embedding.

    q0 satisfies sep_h(X_normalized) * q0 >= 2; Q is the dilation found by
    the collision; epsilons[i] = Q * x_i - a_i with |eps| < 1/(2h) and the
    endpoints exactly 0.
    """

    q0: int
    Q: int
    epsilons: tuple[Fraction, ...]
    result: IntegerSet

    def to_dict(self) -> dict:
        return {
            "q0": self.q0,
            "Q": self.Q,
            "epsilons": [str(e) for e in self.epsilons],
            "result": list(self.result.elements),
        }


def _nearest_int(v: Fraction) -> int:
    # floor(v + 1/2); callers guarantee v is never exactly half-integral
    return (2 * v.numerator + v.denominator) // (2 * v.denominator)


def embed_real_to_integers(X, h: int) -> tuple[IntegerSet, EmbeddingTrace]:
    """A set of nonnegative integers with exactly the h-type of X.

    X may be a RationalSet or IntegerSet with k >= 2. The collision is
    guaranteed within (2h)**(k-2) + 1 dilation steps (that many fractional
    part vectors, one fewer boxes), so the loop always terminates.
    """
    if h < 1:
        raise ValueError("h must be positive")
    k = len(X.elements)
    if k < 2:
        raise ValueError("embedding needs at least two elements")
    lo, hi = X.elements[0], X.elements[-1]
    xs = [Fraction(x - lo, 1) / (hi - lo) for x in X.elements]

    sep = separation(RationalSet(xs), h)
    q0 = math.ceil(Fraction(2) / sep)
    twoh = 2 * h

    seen: dict[tuple[int, ...], int] = {}
    q = 0
    while True:
        scale = q * q0 * twoh
        box = tuple((scale * x).__floor__() % twoh for x in xs[1:-1])
        if box in seen:
            Q = (q - seen[box]) * q0
            break
        seen[box] = q
        q += 1

    members = []
    epsilons = []
    for x in xs:
        v = Q * x
        a = _nearest_int(v)
        members.append(a)
        epsilons.append(v - a)
    A = IntegerSet(members)
    if A.k != k:
        raise AssertionError("embedding collapsed two elements; q0 bound violated")
    return A, EmbeddingTrace(q0, Q, tuple(epsilons), A)


def sum_to_product(S: IntegerSet, max_bits: int = DEFAULT_POWER_BIT_BUDGET) -> IntegerSet:
    """{2**s : s in S}; equal h-fold sums of S become equal h-fold
    products, for every h at once."""
    if S.elements[0] < 0:
        raise ValueError("exponents must be nonnegative")
    if S.elements[-1] > max_bits:
        raise CapExceeded(f"2**{S.elements[-1]} exceeds the {max_bits}-bit budget")
    return IntegerSet(1 << s for s in S.elements)


# ---------------------------------------------------------------------------
# Exact arithmetic on rational combinations of {1, log2 p : p odd prime}


def _factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; intended for desk-scale inputs."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


_LOG2_CACHE: dict[tuple[int, int], tuple[Fraction, Fraction]] = {}


def _log2_bounds(p: int, bits: int) -> tuple[Fraction, Fraction]:
    """Dyadic interval certainly containing log2(p), width 2**(1-bits)."""
    key = (p, bits)
    if key not in _LOG2_CACHE:
        with mpmath.workprec(bits + 16):
            x = mpmath.log(p) / mpmath.log(2)
        sign, man, exp, _ = x._mpf_
        mid = Fraction((-1) ** sign * int(man)) * Fraction(2) ** exp
        margin = Fraction(1, 1 << bits)
        _LOG2_CACHE[key] = (mid - margin, mid + margin)
    return _LOG2_CACHE[key]


class LogLinear:
    """An exact number of the form rat + sum_p coeff[p] * log2(p), over odd
    primes p. The representation is unique, so the number is zero (or
    rational) precisely when the coefficient dict is empty (and rat is 0).
    """

    __slots__ = ("rat", "coeffs")

    def __init__(self, rat: Fraction = Fraction(0), coeffs: dict[int, Fraction] | None = None):
        self.rat = Fraction(rat)
        self.coeffs = {p: c for p, c in (coeffs or {}).items() if c}

    @classmethod
    def log2_of(cls, n: int) -> "LogLinear":
        if n < 1:
            raise ValueError("log2 of a nonpositive integer")
        factors = _factorize(n) if n > 1 else {}
        rat = Fraction(factors.pop(2, 0))
        return cls(rat, {p: Fraction(e) for p, e in factors.items()})

    def scaled(self, m: int) -> "LogLinear":
        return LogLinear(self.rat * m, {p: c * m for p, c in self.coeffs.items()})

    def plus_rational(self, r: Fraction) -> "LogLinear":
        return LogLinear(self.rat + r, self.coeffs)

    def minus(self, other: "LogLinear") -> "LogLinear":
        co = dict(self.coeffs)
        for p, c in other.coeffs.items():
            co[p] = co.get(p, Fraction(0)) - c
        return LogLinear(self.rat - other.rat, co)

    @property
    def is_rational(self) -> bool:
        return not self.coeffs

    def bounds(self, bits: int) -> tuple[Fraction, Fraction]:
        lo = hi = self.rat
        for p, c in self.coeffs.items():
            blo, bhi = _log2_bounds(p, bits)
            if c >= 0:
                lo += c * blo
                hi += c * bhi
            else:
                lo += c * bhi
                hi += c * blo
        return lo, hi

    def floor(self, schedule: tuple[int, ...] = PRECISION_SCHEDULE) -> int:
        """Exact floor. Rational values short-circuit; irrational values
        are never integers, so interval refinement terminates."""
        if self.is_rational:
            return self.rat.__floor__()
        for bits in schedule:
            lo, hi = self.bounds(bits)
            flo = lo.__floor__()
            if flo == hi.__floor__():
                return flo
        raise PrecisionExhaustedError("floor of a log-linear value", schedule)

    def sign_lower_bound(self, schedule: tuple[int, ...] = PRECISION_SCHEDULE) -> Fraction:
        """A positive rational lower bound for a value known to be > 0."""
        if self.is_rational:
            if self.rat <= 0:
                raise ValueError("value is not positive")
            return self.rat
        for bits in schedule:
            lo, _ = self.bounds(bits)
            if lo > 0:
                return lo
        raise PrecisionExhaustedError("lower bound of a log-linear value", schedule)


def product_to_sum(P: IntegerSet, h: int, schedule: tuple[int, ...] = PRECISION_SCHEDULE) -> IntegerSet:
    """A set of nonnegative integers whose additive h-type equals the
    multiplicative h-type of P (elements positive, k >= 2).

    Runs the box-collision scan on {log2 p : p in P} with the LogLinear
    representation, then verifies the claimed type identity exactly via
    big-integer products before returning.
    """
    if h < 1:
        raise ValueError("h must be positive")
    k = P.k
    if k < 2:
        raise ValueError("transport needs at least two elements")
    if P.elements[0] < 1:
        raise ValueError("elements must be positive integers")

    target = product_type(P, h)
    logs = [LogLinear.log2_of(p) for p in P.elements]

    # q0 >= 2 / sep_h(logs): the distinct h-fold products, sorted, give the
    # distinct log sums in order, so consecutive gaps cover the minimum.
    comps = enumerate_compositions(h, k)
    prods = sorted({math.prod(p**c for p, c in zip(P.elements, comp) if c) for comp in comps})
    if len(prods) < 2:
        # only possible for P = {1}; excluded by k >= 2 with distinct elements
        raise ValueError("all h-fold products coincide")
    sep_lb = None
    for m1, m2 in zip(prods, prods[1:]):
        gap = LogLinear.log2_of(m2).minus(LogLinear.log2_of(m1)).sign_lower_bound(schedule)
        sep_lb = gap if sep_lb is None else min(sep_lb, gap)
    q0 = math.ceil(Fraction(2) / sep_lb)
    twoh = 2 * h

    seen: dict[tuple[int, ...], int] = {}
    q = 0
    while True:
        scale = q * q0 * twoh
        box = tuple(l.scaled(scale).floor(schedule) % twoh for l in logs)
        if box in seen:
            Q = (q - seen[box]) * q0
            break
        seen[box] = q
        q += 1

    half = Fraction(1, 2)
    members = [l.scaled(Q).plus_rational(half).floor(schedule) for l in logs]
    A = IntegerSet(members)
    if A.k != k or h_type(A, h) != target:
        raise AssertionError("log-linear transport produced a wrong type; this is a bug")
    return A
