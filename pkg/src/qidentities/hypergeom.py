"""Terminating basic hypergeometric series and the q-Pfaff-Saalschutz sum.

Series parameters are restricted to monomials in x = q^(1/2): an upper or
lower parameter x**t is recorded by its x-exponent t, and the argument z
is likewise a monomial x**z_exp.  A pure power q^n has x-exponent 2n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Degenerate, NonTerminating, PoleInDenominator
from .laurent import ONE, RationalFunction, rf_eq
from .qcombo import QFactored, q_pochhammer, qf_div, qf_expand, qf_mul, qf_to_rational


@dataclass(frozen=True)
class PhiSeries:
    """An (r+1)-phi-r series with monomial parameters.

    upper holds the r+1 numerator-parameter x-exponents, lower the r
    denominator-parameter x-exponents, z_exp the argument's x-exponent.
    """

    upper: tuple
    lower: tuple
    z_exp: int

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(int(t) for t in self.upper))
        object.__setattr__(self, "lower", tuple(int(t) for t in self.lower))
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError("need exactly one more upper parameter than lower")


def _termination_order(upper) -> int:
    """Smallest N >= 0 with some upper parameter equal to q^(-N).

    Raises NonTerminating if no upper exponent has the form -2N.
    """
    orders = [-t // 2 for t in upper if t <= 0 and t % 2 == 0]
    if not orders:
        raise NonTerminating("no upper parameter of the form q^(-N)")
    return min(orders)


def _pochhammer_vanishes(t: int, count: int) -> bool:
    """True iff (x**t; q)_count has a zero factor, i.e. t + 2j = 0 for
    some 0 <= j < count."""
    return t <= 0 and t % 2 == 0 and -t // 2 < count


def phi_evaluate(series: PhiSeries) -> RationalFunction:
    """Exact value of a terminating series as an unreduced fraction.

    Successive terms are built from the factored term ratio (four linear
    factors over three per step here), so each step is O(1) factored work
    plus one fraction accumulation.  Raises NonTerminating or
    PoleInDenominator per the preconditions.
    """
    n_max = _termination_order(series.upper)
    for t in series.lower:
        if _pochhammer_vanishes(t, n_max):
            raise PoleInDenominator(
                "lower parameter x^%d vanishes within summation range" % t
            )
    total = RationalFunction(ONE)
    term = QFactored.one()
    z_mono = QFactored.monomial(1, series.z_exp)
    for ell in range(n_max):
        ratio = z_mono
        for t in series.upper:
            ratio = qf_mul(ratio, QFactored.one_minus_x(t + 2 * ell))
        if ratio.zero:
            break
        for t in series.lower + (2,):  # the (q; q)_ell factor has t = 2
            ratio = qf_div(ratio, QFactored.one_minus_x(t + 2 * ell))
        term = qf_mul(term, ratio)
        total = total + qf_to_rational(term)
    return total


@dataclass(frozen=True)
class SaalschutzInstance:
    """Parameters a = x**a_exp, b = x**b_exp, c = x**c_exp and the
    termination order N of one q-Pfaff-Saalschutz instance.

    The second lower parameter a*b*q^(1-N)/c is derived, never stored.
    """

    a_exp: int
    b_exp: int
    c_exp: int
    N: int

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("N must be a nonnegative integer")

    def derived_lower_exp(self) -> int:
        return self.a_exp + self.b_exp + 2 * (1 - self.N) - self.c_exp

    def lhs_series(self) -> PhiSeries:
        return PhiSeries(
            upper=(self.a_exp, self.b_exp, -2 * self.N),
            lower=(self.c_exp, self.derived_lower_exp()),
            z_exp=2,
        )

    def to_json_obj(self):
        return {"a": self.a_exp, "b": self.b_exp, "c": self.c_exp, "N": self.N}


def saalschutz_rhs(inst: SaalschutzInstance) -> RationalFunction:
    """(c/a; q)_N (c/b; q)_N / ((c; q)_N (c/(ab); q)_N), exactly."""
    num = qf_mul(
        q_pochhammer(inst.c_exp - inst.a_exp, inst.N),
        q_pochhammer(inst.c_exp - inst.b_exp, inst.N),
    )
    den = qf_mul(
        q_pochhammer(inst.c_exp, inst.N),
        q_pochhammer(inst.c_exp - inst.a_exp - inst.b_exp, inst.N),
    )
    if den.zero:
        raise PoleInDenominator("a denominator Pochhammer symbol vanishes")
    return RationalFunction(qf_expand(num), qf_expand(den))


def verify_saalschutz(inst: SaalschutzInstance) -> bool:
    """True iff the terminating series equals the closed form, by
    cross-multiplied fraction equality.

    Raises Degenerate when a lower-parameter Pochhammer symbol vanishes
    within range (equivalently, when the closed form's denominator
    vanishes); such instances are skipped, not failed.
    """
    for t in (inst.c_exp, inst.derived_lower_exp()):
        if _pochhammer_vanishes(t, inst.N):
            raise Degenerate("lower parameter x^%d hits q^0 within range" % t)
    return rf_eq(phi_evaluate(inst.lhs_series()), saalschutz_rhs(inst))


def is_saalschutzian(series: PhiSeries) -> bool:
    """Structural check: does a 3-phi-2 with z = q match the
    q-Pfaff-Saalschutz parameter pattern for some assignment of
    (a, b, N, c)?"""
    if len(series.upper) != 3 or len(series.lower) != 2 or series.z_exp != 2:
        return False
    for i, t in enumerate(series.upper):
        if t > 0 or t % 2 != 0:
            continue
        n_order = -t // 2
        a, b = (series.upper[j] for j in range(3) if j != i)
        for c, other in (
            (series.lower[0], series.lower[1]),
            (series.lower[1], series.lower[0]),
        ):
            if other == a + b + 2 * (1 - n_order) - c:
                return True
    return False
