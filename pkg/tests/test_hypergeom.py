"""Tests for terminating basic hypergeometric series and the
q-Pfaff-Saalschutz summation."""

import itertools

import pytest
from hypothesis import given, strategies as st

from qidentities import (
    Degenerate,
    NonTerminating,
    ONE,
    PhiSeries,
    PoleInDenominator,
    RationalFunction,
    SaalschutzInstance,
    is_saalschutzian,
    phi_evaluate,
    rf_eq,
    saalschutz_rhs,
    verify_saalschutz,
)

RF_ONE = RationalFunction(ONE)


def thm1_proof_series(d0: int, d1: int) -> PhiSeries:
    """upper q^(-2 d1), q^(-d1), q^(1-d1); lower q^(1+d0-2 d1),
    q^(1-d0-2 d1); argument q.  Exponents are in x-units (2 per power of q)."""
    return PhiSeries(
        upper=(-4 * d1, -2 * d1, 2 - 2 * d1),
        lower=(2 + 2 * d0 - 4 * d1, 2 - 2 * d0 - 4 * d1),
        z_exp=2,
    )


def thm1_proof_instance(d0: int, d1: int) -> SaalschutzInstance:
    # terminating parameter q^(-2 d1), so N = 2 d1; a = q^(-d1), b = q^(1-d1),
    # c = q^(1+d0-2 d1); the remaining lower parameter is then derived.
    return SaalschutzInstance(
        a_exp=-2 * d1, b_exp=2 - 2 * d1, c_exp=2 + 2 * d0 - 4 * d1, N=2 * d1
    )


def thm2_proof_series(d1: int, d2: int) -> PhiSeries:
    """upper q^(1+d1+d2), q^(1-d2), q^(1-d1); lower q^2, q^2; argument q."""
    return PhiSeries(
        upper=(2 + 2 * d1 + 2 * d2, 2 - 2 * d2, 2 - 2 * d1),
        lower=(4, 4),
        z_exp=2,
    )


def thm2_proof_instance(d1: int, d2: int) -> SaalschutzInstance:
    # a = q^(1+d1+d2), b = q^(1-d2), N = d1 - 1 (from q^(1-d1)), c = q^2
    return SaalschutzInstance(
        a_exp=2 + 2 * d1 + 2 * d2, b_exp=2 - 2 * d2, c_exp=4, N=d1 - 1
    )


# -- series basics -----------------------------------------------------------------


def test_phi_series_shape_check():
    with pytest.raises(ValueError):
        PhiSeries(upper=(2, 2), lower=(2, 2), z_exp=2)


def test_phi_requires_termination():
    with pytest.raises(NonTerminating):
        phi_evaluate(PhiSeries(upper=(2, 4, 3), lower=(6, 6), z_exp=2))


def test_phi_unit_parameter_gives_one():
    # an upper parameter equal to q^0 = 1 kills every term past l = 0
    series = PhiSeries(upper=(0, 4, -6), lower=(6, 8), z_exp=2)
    assert rf_eq(phi_evaluate(series), RF_ONE)


def test_phi_order_zero_gives_one():
    series = PhiSeries(upper=(0, 4, 6), lower=(6, 8), z_exp=2)
    assert rf_eq(phi_evaluate(series), RF_ONE)


def test_phi_pole_detection():
    with pytest.raises(PoleInDenominator):
        phi_evaluate(PhiSeries(upper=(4, 6, -4), lower=(-2, 8), z_exp=2))


def test_phi_two_term_sum_by_hand():
    # N = 1: value is 1 + (1-a)(1-b)(1-q^-1) z / ((1-q)(1-b1)(1-b2))
    series = PhiSeries(upper=(4, 6, -2), lower=(8, 10), z_exp=2)
    value = phi_evaluate(series)
    from qidentities import LaurentPoly

    def lin(t):
        return LaurentPoly({0: 1, t: -1})

    term1 = RationalFunction(
        LaurentPoly({2: 1}) * lin(4) * lin(6) * lin(-2),
        lin(2) * lin(8) * lin(10),
    )
    assert rf_eq(value, RF_ONE + term1)


def test_phi_parameter_permutation_invariance():
    base = PhiSeries(upper=(4, 6, -4), lower=(8, 10), z_exp=2)
    value = phi_evaluate(base)
    for perm in itertools.permutations(base.upper):
        assert rf_eq(phi_evaluate(PhiSeries(perm, base.lower, 2)), value)
    assert rf_eq(
        phi_evaluate(PhiSeries(base.upper, (10, 8), 2)), value
    )


@given(
    st.integers(min_value=1, max_value=4),
    st.permutations([0, 1, 2]),
)
def test_phi_permutation_property(n_order, perm):
    upper = (3, 6, -2 * n_order)
    lower = (5, 9)
    base = phi_evaluate(PhiSeries(upper, lower, 2))
    shuffled = tuple(upper[i] for i in perm)
    assert rf_eq(phi_evaluate(PhiSeries(shuffled, lower, 2)), base)


# -- the summation formula ---------------------------------------------------------


def test_rhs_order_zero_is_one():
    assert rf_eq(saalschutz_rhs(SaalschutzInstance(3, 5, 7, 0)), RF_ONE)


def test_rhs_vanishing_numerator():
    inst = SaalschutzInstance(a_exp=6, b_exp=3, c_exp=6, N=2)
    value = saalschutz_rhs(inst)
    assert value.num.is_zero()


def test_rhs_pole():
    with pytest.raises(PoleInDenominator):
        saalschutz_rhs(SaalschutzInstance(a_exp=3, b_exp=5, c_exp=0, N=1))


def test_verify_basic_instances():
    assert verify_saalschutz(SaalschutzInstance(2, 4, 8, 2))
    assert verify_saalschutz(SaalschutzInstance(-3, 5, 1, 0))


def test_verify_order_one_generic():
    for a, b, c in itertools.product((-2, 3, 5), repeat=3):
        inst = SaalschutzInstance(a, b, c, 1)
        try:
            assert verify_saalschutz(inst)
        except Degenerate:
            pass


def test_verify_degenerate_detection():
    with pytest.raises(Degenerate):
        verify_saalschutz(SaalschutzInstance(a_exp=3, b_exp=5, c_exp=0, N=1))
    # derived lower parameter hits q^0: a + b + 2(1-N) - c = 0
    with pytest.raises(Degenerate):
        verify_saalschutz(SaalschutzInstance(a_exp=3, b_exp=5, c_exp=6, N=2))


def test_instance_validation_and_json():
    with pytest.raises(ValueError):
        SaalschutzInstance(2, 4, 8, -1)
    inst = SaalschutzInstance(2, 4, 8, 2)
    assert inst.to_json_obj() == {"a": 2, "b": 4, "c": 8, "N": 2}
    assert inst.derived_lower_exp() == 2 + 4 + 2 * (1 - 2) - 8


# -- structural pattern matching ------------------------------------------------------


def test_is_saalschutzian_proof_instances():
    assert is_saalschutzian(thm1_proof_series(3, 2))
    assert is_saalschutzian(thm2_proof_series(2, 3))


def test_is_saalschutzian_negatives():
    assert not is_saalschutzian(PhiSeries((-4, 6, 10), (2, 2), 2))
    assert not is_saalschutzian(PhiSeries((-4, 6, 10), (2, 2), 4))
    assert not is_saalschutzian(PhiSeries((2, -4), (6,), 2))


def test_is_saalschutzian_matches_instances():
    for inst in (SaalschutzInstance(2, 4, 8, 2), SaalschutzInstance(-3, 7, 5, 3)):
        assert is_saalschutzian(inst.lhs_series())


# -- the proof-specific families -----------------------------------------------------


def test_thm1_proof_instance_small():
    d0, d1 = 5, 2
    inst = thm1_proof_instance(d0, d1)
    assert rf_eq(phi_evaluate(thm1_proof_series(d0, d1)), saalschutz_rhs(inst))
    assert verify_saalschutz(inst)


def test_thm1_proof_instance_degenerate_cells():
    # when d0 <= 2*d1 - 1 the series has a lower-parameter zero in range;
    # those are exactly the cells where the surrounding prefactor
    # qbinom(d0 - d1 - 1, d1 - 1) vanishes, so skipping them loses nothing
    from qidentities import q_binomial

    with pytest.raises(Degenerate):
        verify_saalschutz(thm1_proof_instance(3, 2))
    assert q_binomial(3 - 2 - 1, 2 - 1).is_zero()


def test_thm2_proof_instance_small():
    d1, d2 = 2, 3
    inst = thm2_proof_instance(d1, d2)
    assert rf_eq(phi_evaluate(thm2_proof_series(d1, d2)), saalschutz_rhs(inst))
    assert verify_saalschutz(inst)


def test_proof_instances_match_their_series():
    # the explicit instances reproduce the series parameters up to ordering
    s = thm1_proof_series(5, 2)
    i = thm1_proof_instance(5, 2).lhs_series()
    assert sorted(s.upper) == sorted(i.upper)
    assert sorted(s.lower) == sorted(i.lower)
    s = thm2_proof_series(4, 3)
    i = thm2_proof_instance(4, 3).lhs_series()
    assert sorted(s.upper) == sorted(i.upper)
    assert sorted(s.lower) == sorted(i.lower)
