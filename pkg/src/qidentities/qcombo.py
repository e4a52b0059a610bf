"""q-integers, q-Pochhammer symbols, and q-binomial coefficients.

Everything is built on QFactored, a signed monomial times a product of
cyclotomic-style factors (1 - x^e).  Keeping values factored for as long
as possible means a single exact expansion (plus at most one exact
division) at the end, instead of a chain of polynomial divisions.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DivisionByZero, NotPolynomial
from .laurent import ONE, ZERO, LaurentPoly, RationalFunction


class QFactored:
    """sign * x**x_power * prod over e of (1 - x**e)**mult, or zero.

    Invariants: factor keys e are >= 1 (negative exponents are normalized
    via 1 - x^(-e) = -x^(-e) (1 - x^e), and 1 - x^0 = 0 collapses the
    whole value to zero); no stored multiplicity is zero.  Multiplicities
    may be negative, in which case the value is a genuine rational
    function rather than a Laurent polynomial.
    """

    __slots__ = ("zero", "sign", "x_power", "factors")

    def __init__(self, sign=1, x_power=0, factors=None, zero=False):
        self.zero = bool(zero)
        if self.zero:
            self.sign = 1
            self.x_power = 0
            self.factors = {}
            return
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.sign = sign
        self.x_power = int(x_power)
        cleaned = {}
        if factors:
            for e, m in factors.items():
                if e < 1:
                    raise ValueError("factor exponents must be >= 1")
                if m:
                    cleaned[int(e)] = int(m)
        self.factors = cleaned

    @classmethod
    def zero_value(cls) -> "QFactored":
        return cls(zero=True)

    @classmethod
    def one(cls) -> "QFactored":
        return cls()

    @classmethod
    def monomial(cls, sign: int, x_power: int) -> "QFactored":
        return cls(sign=sign, x_power=x_power)

    @classmethod
    def one_minus_x(cls, e: int) -> "QFactored":
        """The factor 1 - x**e, normalized so the stored exponent is >= 1."""
        if e == 0:
            return cls.zero_value()
        if e > 0:
            return cls(factors={e: 1})
        return cls(sign=-1, x_power=e, factors={-e: 1})

    def __eq__(self, other):
        if not isinstance(other, QFactored):
            return NotImplemented
        if self.zero or other.zero:
            return self.zero == other.zero
        return (
            self.sign == other.sign
            and self.x_power == other.x_power
            and self.factors == other.factors
        )

    def __hash__(self):
        if self.zero:
            return hash(("QFactored", "zero"))
        return hash((self.sign, self.x_power, tuple(sorted(self.factors.items()))))

    def __repr__(self):
        if self.zero:
            return "QFactored(zero=True)"
        return "QFactored(sign=%d, x_power=%d, factors=%r)" % (
            self.sign,
            self.x_power,
            self.factors,
        )


def qf_mul(a: QFactored, b: QFactored) -> QFactored:
    """Exact product; zero absorbs."""
    if a.zero or b.zero:
        return QFactored.zero_value()
    factors = dict(a.factors)
    for e, m in b.factors.items():
        v = factors.get(e, 0) + m
        if v:
            factors[e] = v
        else:
            factors.pop(e, None)
    return QFactored(a.sign * b.sign, a.x_power + b.x_power, factors)


def qf_div(a: QFactored, b: QFactored) -> QFactored:
    """Exact quotient in factored form; raises DivisionByZero if b is zero."""
    if b.zero:
        raise DivisionByZero("division of QFactored by zero")
    if a.zero:
        return QFactored.zero_value()
    factors = dict(a.factors)
    for e, m in b.factors.items():
        v = factors.get(e, 0) - m
        if v:
            factors[e] = v
        else:
            factors.pop(e, None)
    return QFactored(a.sign * b.sign, a.x_power - b.x_power, factors)


def qf_expand(a: QFactored) -> LaurentPoly:
    """Expand a factored value into a LaurentPoly.

    Raises NotPolynomial if any multiplicity is negative.
    """
    if a.zero:
        return ZERO
    out = LaurentPoly.monomial(a.sign, a.x_power)
    for e, m in sorted(a.factors.items()):
        if m < 0:
            raise NotPolynomial("negative multiplicity %d at exponent %d" % (m, e))
        factor = LaurentPoly({0: 1, e: -1})
        for _ in range(m):
            out = out * factor
    return out


def qf_to_rational(a: QFactored) -> RationalFunction:
    """Split into numerator (positive multiplicities, sign, monomial) over
    denominator (negative multiplicities)."""
    if a.zero:
        return RationalFunction(ZERO, ONE)
    num = QFactored(a.sign, a.x_power, {e: m for e, m in a.factors.items() if m > 0})
    den = QFactored(1, 0, {e: -m for e, m in a.factors.items() if m < 0})
    return RationalFunction(qf_expand(num), qf_expand(den))


def qf_expand_ratio(a: QFactored) -> LaurentPoly:
    """Expand a factored value known to be polynomial, via one exact division.

    Unlike qf_expand this tolerates negative multiplicities as long as the
    overall value is a Laurent polynomial; it expands numerator and
    denominator separately and divides once.  Raises NotDivisible if the
    value is not actually polynomial.
    """
    frac = qf_to_rational(a)
    if frac.den == ONE:
        return frac.num
    return frac.num.exact_div(frac.den)


def q_int(alpha: int) -> QFactored:
    """The symmetric q-integer x**alpha - x**(-alpha), in factored form.

    Vanishes at alpha = 0 and is antisymmetric in alpha.
    """
    if alpha == 0:
        return QFactored.zero_value()
    if alpha < 0:
        pos = q_int(-alpha)
        return QFactored(-pos.sign, pos.x_power, pos.factors)
    return QFactored(sign=-1, x_power=-alpha, factors={2 * alpha: 1})


def q_pochhammer(t: int, m: int) -> QFactored:
    """(x**t; q)_m = prod over j in [0, m) of (1 - x**(t + 2j)).

    The base parameter is restricted to the monomial x**t; m must be >= 0.
    The result is zero iff some t + 2j vanishes in range.
    """
    if m < 0:
        raise ValueError("Pochhammer count must be >= 0")
    out = QFactored.one()
    for j in range(m):
        out = qf_mul(out, QFactored.one_minus_x(t + 2 * j))
        if out.zero:
            break
    return out


def q_binomial_factored(n: int, k: int) -> QFactored:
    """The q-binomial coefficient as a QFactored ratio of q-integers.

    Returns zero outside 0 <= k <= n.  The ratio typically carries negative
    multiplicities even though its value is polynomial; expand it with
    qf_expand_ratio.
    """
    if k < 0 or n < 0 or k > n:
        return QFactored.zero_value()
    out = QFactored.one()
    for i in range(k):
        out = qf_mul(out, q_int(n - i))
        out = qf_div(out, q_int(k - i))
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentPoly:
    """The symmetric q-binomial coefficient as a Laurent polynomial.

    [n choose k]_q = [n]_q [n-1]_q ... [n-k+1]_q / ([k]_q ... [1]_q) for
    0 <= k <= n, and the zero polynomial otherwise (negative arguments
    included).  Always palindromic under x -> x^(-1).
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    return qf_expand_ratio(q_binomial_factored(n, k))


@lru_cache(maxsize=None)
def q_binomial_signed(n: int, k: int) -> LaurentPoly:
    """The q-binomial as the generic ratio of q-integers, valid for any
    integer top.

    For n >= 0 this agrees with q_binomial (the ratio contains the factor
    [0]_q = 0 whenever 0 <= n < k).  For n < 0 the ratio never vanishes
    and equals (-1)^k times a positive q-binomial, matching the classical
    negative-top extension of binomial coefficients.  Still palindromic
    under x -> x^(-1), since each q-integer is antisymmetric.  This is the
    convention under which the refined-sum closed form holds for every
    positive D, not just D large relative to d1.
    """
    if k < 0:
        return ZERO
    if n >= 0:
        return q_binomial(n, k)
    return qf_expand_ratio(q_binomial_signed_factored(n, k))


def q_binomial_signed_factored(n: int, k: int) -> QFactored:
    """Factored form of the generic-ratio q-binomial; n may be negative."""
    if k < 0 or (0 <= n < k):
        return QFactored.zero_value()
    out = QFactored.one()
    for i in range(k):
        out = qf_mul(out, q_int(n - i))
        out = qf_div(out, q_int(k - i))
    return out
