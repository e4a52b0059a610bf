"""Partition-indexed sums: the refined sum f and the theorem left-hand sides.

Indices are integer partitions written in distinct-part/multiplicity form:
strictly decreasing parts n_1 > ... > n_m > 0 with positive multiplicities
k_1, ..., k_m.  The refined sum f pins both the weighted sum of parts and
the total multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidHypothesis
from .laurent import ONE, ZERO, LaurentPoly
from .qcombo import q_binomial, q_binomial_signed


@dataclass(frozen=True)
class PartitionedIndex:
    """One summand's index: parts strictly decreasing, mults all >= 1."""

    parts: tuple
    mults: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        object.__setattr__(self, "mults", tuple(int(k) for k in self.mults))
        if len(self.parts) != len(self.mults) or not self.parts:
            raise ValueError("parts and mults must be nonempty and equal length")
        if any(k < 1 for k in self.mults):
            raise ValueError("multiplicities must be >= 1")
        if self.parts[-1] < 1 or any(
            a <= b for a, b in zip(self.parts, self.parts[1:])
        ):
            raise ValueError("parts must be strictly decreasing and positive")

    @property
    def m(self) -> int:
        return len(self.parts)

    def weighted_sum(self) -> int:
        return sum(n * k for n, k in zip(self.parts, self.mults))

    def mult_sum(self) -> int:
        return sum(self.mults)

    def to_json_obj(self):
        return {"parts": list(self.parts), "mults": list(self.mults)}


@dataclass(frozen=True)
class FSumSpec:
    """Arguments of the refined sum f.

    D is the doubled first parameter (D = 2*d0), so half-integer d0 is
    representable; d1 is the weighted-sum target and k0 the total
    multiplicity.
    """

    D: int
    d1: int
    k0: int

    def __post_init__(self):
        if self.d1 < 0 or self.k0 < 0:
            raise ValueError("d1 and k0 must be nonnegative")


def _raw_indices(remaining, max_part):
    """All (parts, mults) with distinct parts <= max_part summing (weighted)
    to remaining; no particular order."""
    if remaining == 0:
        yield (), ()
        return
    for n in range(min(max_part, remaining), 0, -1):
        for k in range(1, remaining // n + 1):
            for parts, mults in _raw_indices(remaining - n * k, n - 1):
                yield (n,) + parts, (k,) + mults


def _index_sort_key(idx: PartitionedIndex):
    # Parts descending-lex with end-of-sequence treated as -infinity
    # (so [2, 1] precedes [2]); ties broken by mults ascending.
    return tuple(-p for p in idx.parts) + (float("inf"),), idx.mults


def enumerate_indices(d: int, k0: int | None = None):
    """All PartitionedIndex values with weighted sum d, and total
    multiplicity k0 when given, in the canonical deterministic order."""
    if d < 1:
        raise ValueError("d must be >= 1")
    found = [PartitionedIndex(p, m) for p, m in _raw_indices(d, d)]
    if k0 is not None:
        found = [idx for idx in found if idx.mult_sum() == k0]
    found.sort(key=_index_sort_key)
    return found


def f_term(D: int, idx: PartitionedIndex) -> LaurentPoly:
    """One summand of the refined sum: the product over i of
    qbinom(D - 2*sum_{j<i} (n_j - n_i) k_j, k_i).

    The binomials use the generic-ratio (signed) extension so the refined
    sum matches its closed form for every positive D; on nonnegative tops
    this is the ordinary convention, which is all the theorem left-hand
    sides ever exercise."""
    total = ONE
    weighted = 0  # sum of n_j k_j over previous factors
    count = 0  # sum of k_j over previous factors
    for n, k in zip(idx.parts, idx.mults):
        top = D - 2 * weighted + 2 * n * count
        total = total * q_binomial_signed(top, k)
        if total.is_zero():
            return ZERO
        weighted += n * k
        count += k
    return total


def f_enumerated(spec: FSumSpec) -> LaurentPoly:
    """The refined sum f(D/2, d1, k0) by direct enumeration of indices.

    Conventions: 1 when d1 = k0 = 0 (empty product), 0 when exactly one of
    them is 0, and 0 when k0 > d1.
    """
    if spec.d1 == 0 and spec.k0 == 0:
        return ONE
    if spec.d1 == 0 or spec.k0 == 0 or spec.k0 > spec.d1:
        return ZERO
    total = ZERO
    for idx in enumerate_indices(spec.d1, spec.k0):
        total = total + f_term(spec.D, idx)
    return total


def f_recursive(spec: FSumSpec, cache: dict | None = None) -> LaurentPoly:
    """The refined sum by the peel-off-the-smallest-part recursion:

        f(D, d1, k0) = sum_{k=1..k0} sum_{n=1..d1//k0}
                       f(D, d1 - n*k0, k0 - k) * qbinom(D - 2*d1 + 2*n*k0, k)

    with f(D, 0, 0) = 1 and f zero when exactly one of d1, k0 is 0.
    The cache is scoped to this call unless the caller supplies one.
    """
    if cache is None:
        cache = {}

    def rec(d1, k0):
        if d1 == 0 and k0 == 0:
            return ONE
        if d1 == 0 or k0 == 0:
            return ZERO
        key = (d1, k0)
        hit = cache.get(key)
        if hit is not None:
            return hit
        total = ZERO
        for k in range(1, k0 + 1):
            for n in range(1, d1 // k0 + 1):
                tail = rec(d1 - n * k0, k0 - k)
                if tail.is_zero():
                    continue
                total = total + tail * q_binomial_signed(spec.D - 2 * d1 + 2 * n * k0, k)
        cache[key] = total
        return total

    # Cached subvalues depend on D, so a shared cache is only valid across
    # evaluations with the same D.
    marker = cache.setdefault("_scope", spec.D)
    if marker != spec.D:
        raise ValueError("shared cache used across different D values")
    return rec(spec.d1, spec.k0)


def theorem1_lhs(d0: int, d1: int) -> LaurentPoly:
    """The full partition sum on the left of the first theorem.

    Computed two ways (direct transcription, and the refined-sum
    refactoring over the trailing binomial) and asserted equal.
    Requires d0 > d1 >= 1.
    """
    if d1 < 1 or d0 <= d1:
        raise InvalidHypothesis("theorem 1 requires d0 > d1 >= 1")
    # (a) direct transcription: k0 >= 0, sum k_i = d1 - k0, sum n_i k_i = d0 - d1
    direct = ZERO
    for idx in enumerate_indices(d0 - d1):
        k0 = d1 - idx.mult_sum()
        if k0 < 0:
            continue
        direct = direct + f_term(2 * d0, idx) * q_binomial(2 * d1, k0)
    # (b) via the refined sum
    refined = ZERO
    for k0 in range(0, d1 + 1):
        part = f_enumerated(FSumSpec(2 * d0, d0 - d1, d1 - k0))
        refined = refined + part * q_binomial(2 * d1, k0)
    if direct != refined:
        raise ArithmeticError(
            "internal disagreement in theorem1_lhs(%d, %d)" % (d0, d1)
        )
    return direct


def theorem2_lhs(d1: int, d2: int) -> LaurentPoly:
    """The full partition sum on the left of the second theorem.

    Computed two ways (direct transcription with the trailing
    qbinom(d2, sum k_i) factor, and the refined-sum refactoring) and
    asserted equal.  Requires d1 >= 1 and d2 >= 1.
    """
    if d1 < 1 or d2 < 1:
        raise InvalidHypothesis("theorem 2 requires d1 >= 1 and d2 >= 1")
    D = 2 * d1 + d2
    direct = ZERO
    for idx in enumerate_indices(d1):
        direct = direct + f_term(D, idx) * q_binomial(d2, idx.mult_sum())
    refined = ZERO
    for k0 in range(1, d1 + 1):
        part = f_enumerated(FSumSpec(D, d1, k0))
        refined = refined + part * q_binomial(d2, k0)
    if direct != refined:
        raise ArithmeticError(
            "internal disagreement in theorem2_lhs(%d, %d)" % (d1, d2)
        )
    return direct
