from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from quatdesign.exactnum import rat
from quatdesign.gegenbauer import (
    assemble_from_expansion,
    chebyshev_u_value,
    gegenbauer,
    gegenbauer_expand,
    gegenbauer_value_at_one,
    harm_dim,
    scaled_q,
)
from quatdesign.unipoly import UniPoly


def generating_function_coeffs(lam: Fraction, order: int):
    """Taylor coefficients of (1 - 2su + u^2)^(-lam) in u, as polynomials in s.

    Independent oracle: expand via the generalized binomial series
    (1 - w)^(-lam) = sum_k C(lam + k - 1, k) w^k with w = 2su - u^2,
    entirely in exact rational arithmetic (lists over u, UniPoly over s).
    """
    w = [UniPoly.zero(), UniPoly([0, 2]), UniPoly([-1])]  # w = 2su - u^2
    w_k = [UniPoly([1])] + [UniPoly.zero()] * order
    total = [UniPoly.zero() for _ in range(order + 1)]
    total[0] = UniPoly([1])
    coeff = Fraction(1)
    for k in range(1, order + 1):
        coeff = coeff * (lam + k - 1) / k
        new = [UniPoly.zero() for _ in range(order + 1)]
        for i, ci in enumerate(w_k):
            if ci.is_zero():
                continue
            for j, cj in enumerate(w):
                if i + j <= order and not cj.is_zero():
                    new[i + j] = new[i + j] + ci * cj
        w_k = new
        for idx in range(order + 1):
            if not w_k[idx].is_zero():
                total[idx] = total[idx] + w_k[idx] * coeff
    return total


@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(1), Fraction(3, 2)])
def test_recurrence_matches_generating_function(lam):
    oracle = generating_function_coeffs(lam, 12)
    for ell in range(13):
        assert gegenbauer(ell, lam) == oracle[ell]


def test_degree_two_closed_form():
    for lam in (Fraction(1, 2), Fraction(1), Fraction(5, 2)):
        expected = UniPoly([-lam, 0, 2 * lam * (1 + lam)])
        assert gegenbauer(2, lam) == expected


def test_value_at_one():
    for ell in range(9):
        for lam in (Fraction(1, 2), Fraction(1)):
            poly = gegenbauer(ell, lam)
            assert poly(rat(1)).a == gegenbauer_value_at_one(ell, lam)


def test_lambda_must_be_positive():
    with pytest.raises(ValueError):
        gegenbauer(3, Fraction(0))


def test_scaled_q_closed_forms():
    for d in (3, 4, 5):
        got = scaled_q(2, d)
        expected = UniPoly([Fraction(-(d + 2), 2), 0, Fraction(d * (d + 2), 2)])
        assert got == expected
    assert scaled_q(4, 4) == UniPoly([5, 0, -60, 0, 80])
    assert scaled_q(6, 4) == UniPoly([-7, 0, 168, 0, -560, 0, 448])
    with pytest.raises(ValueError):
        scaled_q(2, 2)


def test_scaled_q_dimension_at_one():
    for ell in range(11):
        assert scaled_q(ell, 4)(rat(1)).a == (ell + 1) ** 2
        assert harm_dim(ell, 4) == (ell + 1) ** 2
    assert harm_dim(8, 4) == comb(11, 8) - comb(9, 6)


def test_expand_basis_element():
    coeffs = gegenbauer_expand(scaled_q(3, 4), 4)
    assert coeffs[3] == 1
    assert all(c == 0 for k, c in enumerate(coeffs) if k != 3)


def test_expand_s_squared():
    coeffs = gegenbauer_expand(UniPoly([0, 0, 1]), 4)
    assert coeffs[0] == Fraction(1, 4)
    assert coeffs[2] == Fraction(1, 12)
    assert coeffs[1] == 0


def weighted_moment(k: int) -> Fraction:
    """integral of s^k (1-s^2)^(1/2) over [-1,1], divided by pi."""
    if k % 2:
        return Fraction(0)
    n = k // 2
    return Fraction(comb(2 * n, n), 4**n * (n + 1) * 2)


def weighted_integral(p: UniPoly) -> Fraction:
    return sum(
        (c.a * weighted_moment(k) for k, c in enumerate(p.coeffs)), Fraction(0)
    )


@pytest.mark.parametrize("degree", [0, 1, 2, 3, 4, 5, 6])
def test_expand_against_integral_oracle(degree):
    # f_l = int F Q_l w / int Q_l^2 w with weight (1-s^2)^(1/2)
    f = UniPoly([Fraction(k + 1, 3) for k in range(degree + 1)])
    computed = gegenbauer_expand(f, 4)
    for ell in range(degree + 1):
        q = scaled_q(ell, 4)
        oracle = weighted_integral(f * q) / weighted_integral(q * q)
        assert computed[ell] == oracle


@given(
    st.lists(
        st.fractions(min_value=Fraction(-20), max_value=Fraction(20), max_denominator=9),
        min_size=1,
        max_size=21,
    )
)
@settings(max_examples=40, deadline=None)
def test_expand_round_trip(coeffs):
    f = UniPoly(coeffs)
    expansion = gegenbauer_expand(f, 4)
    assert assemble_from_expansion(expansion, 4) == f


def test_multiplication_recurrence_consistency():
    # s * Q_l lies in the span of Q_{l-1} and Q_{l+1} (orthogonality check)
    s = UniPoly([0, 1])
    for ell in range(1, 9):
        coeffs = gegenbauer_expand(s * scaled_q(ell, 4), 4)
        support = {k for k, c in enumerate(coeffs) if c != 0}
        assert support <= {ell - 1, ell + 1}


def test_chebyshev_evaluation_matches_polynomial():
    for ell in range(12):
        poly = gegenbauer(ell, Fraction(1))
        for val in (rat(0), rat(Fraction(1, 2)), rat(-1)):
            assert chebyshev_u_value(ell, val) == poly(val)
