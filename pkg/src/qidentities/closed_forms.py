"""Closed forms for the refined sum, both theorems, and the two
generating-series values.

Everything is assembled in factored form (QFactored) and expanded once at
the end, so bracket ratios like [2d0]_q / [d0]_q never pass through a
Laurent-polynomial division chain.
"""

from __future__ import annotations

from .errors import InvalidHypothesis
from .laurent import LaurentPoly
from .qcombo import (
    q_binomial_factored,
    q_binomial_signed_factored,
    q_int,
    qf_div,
    qf_expand_ratio,
    qf_mul,
)

SURFACE_TAGS = ("dP1_04", "F0_04")


def prop3_rhs(D: int, d1: int, k0: int) -> LaurentPoly:
    """Closed form of the refined sum:
    ([D]_q / [k0]_q) * qbinom(D - d1 + k0 - 1, k0 - 1) * qbinom(d1 - 1, k0 - 1),
    where D is the doubled first parameter.  Requires 1 <= k0 <= d1 and D >= 1.

    The first binomial's top D - d1 + k0 - 1 can be negative for small D;
    it is taken in the generic-ratio (signed) convention, which is what
    makes the closed form valid for arbitrary positive D.
    """
    if D < 1:
        raise InvalidHypothesis("D must be >= 1")
    if not 1 <= k0 <= d1:
        raise InvalidHypothesis("requires 1 <= k0 <= d1")
    qf = qf_div(q_int(D), q_int(k0))
    qf = qf_mul(qf, q_binomial_signed_factored(D - d1 + k0 - 1, k0 - 1))
    qf = qf_mul(qf, q_binomial_factored(d1 - 1, k0 - 1))
    return qf_expand_ratio(qf)


def theorem1_rhs(d0: int, d1: int) -> LaurentPoly:
    """([2d0]_q / [d0]_q) * qbinom(d0, d1) * qbinom(d0 + d1 - 1, d0).

    The bracket ratio equals x**d0 + x**(-d0).  Requires d0 > d1 >= 1.
    """
    if d1 < 1 or d0 <= d1:
        raise InvalidHypothesis("theorem 1 requires d0 > d1 >= 1")
    qf = qf_div(q_int(2 * d0), q_int(d0))
    qf = qf_mul(qf, q_binomial_factored(d0, d1))
    qf = qf_mul(qf, q_binomial_factored(d0 + d1 - 1, d0))
    return qf_expand_ratio(qf)


def theorem2_rhs(d1: int, d2: int) -> LaurentPoly:
    """([2d1 + d2]_q / [d2]_q) * qbinom(d1 + d2 - 1, d1)**2.

    Also checks the generating-series spelling with qbinom(d1 + d2 - 1,
    d2 - 1) squared; the two must agree by binomial symmetry.  Requires
    d1 >= 1 and d2 >= 1 (the bracket [d2]_q vanishes at d2 = 0).
    """
    if d1 < 1 or d2 < 1:
        raise InvalidHypothesis("theorem 2 requires d1 >= 1 and d2 >= 1")
    qf = qf_div(q_int(2 * d1 + d2), q_int(d2))
    bino = q_binomial_factored(d1 + d2 - 1, d1)
    value = qf_expand_ratio(qf_mul(qf, qf_mul(bino, bino)))
    alt = q_binomial_factored(d1 + d2 - 1, d2 - 1)
    alt_value = qf_expand_ratio(qf_mul(qf, qf_mul(alt, alt)))
    if value != alt_value:
        raise ArithmeticError(
            "binomial-spelling disagreement in theorem2_rhs(%d, %d)" % (d1, d2)
        )
    return value


def nlog_value(surface: str, p: int, r: int) -> LaurentPoly:
    """The generating-series value for one of the two supported surfaces.

    For "dP1_04" the arguments are (d0, d1) with d0 > d1 >= 1; for "F0_04"
    they are (d1, d2) with both >= 1.  The published binomial spelling is
    asserted equal to the theorem form at runtime.
    """
    if surface not in SURFACE_TAGS:
        raise ValueError("unknown surface tag: %r" % (surface,))
    if surface == "dP1_04":
        value = theorem1_rhs(p, r)
        # published spelling: qbinom(d0 + d1 - 1, d1 - 1) in the last slot
        qf = qf_div(q_int(2 * p), q_int(p))
        qf = qf_mul(qf, q_binomial_factored(p, r))
        qf = qf_mul(qf, q_binomial_factored(p + r - 1, r - 1))
        if qf_expand_ratio(qf) != value:
            raise ArithmeticError("spelling disagreement in nlog_value(dP1_04)")
        return value
    if p < 1 or r < 1:
        raise InvalidHypothesis("F0_04 requires d1 >= 1 and d2 >= 1")
    return theorem2_rhs(p, r)
